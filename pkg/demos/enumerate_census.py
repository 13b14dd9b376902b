"""Count and collect inequivalent minimum-genus embeddings.

Run:  python demos/enumerate_census.py
"""

from kn3genus import (
    canonicalize,
    count_lower_bound,
    count_upper_bound,
    enumerate_variants,
    exhaustive_classes_order4,
    format_census,
)

# Order 4 is rigid: brute force over all circuit orientations finds a single
# equivalence class, matching the upper bound exactly.
classes = exhaustive_classes_order4()
print(f"order 4: {len(classes)} class (upper bound {count_upper_bound(4)})")

# From order 6 on, the construction has free choices (which transition to
# break, how to pair the vertices, role swaps, exchanging the two new
# vertices), and different choices give inequivalent embeddings.
for n in (6, 8, 10):
    print(f"order {n}: at least {count_lower_bound(n)} classes, "
          f"at most {count_upper_bound(n)}")

result = enumerate_variants(6, orientable=True, count=6, seed=1)
print(f"\nsampled {len(result)} inequivalent orientable families at order 6:")
for s in result.families:
    print("  digest:", hash(canonicalize(s)) & 0xFFFFFFFF)

# Census files store one verified family per record, digest-protected.
text = format_census(result.families[:2])
print("\ncensus file preview:")
print("\n".join(text.splitlines()[:6]))
