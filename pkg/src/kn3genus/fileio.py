"""Versioned text formats for circuit families, schemes, and census files.

Families: header line, a metadata line, then one `T <i>: ...` line per
circuit.  For multiplicity m > 1 the writer adds optional `L <i>: ...`
lines carrying the parallel-copy label of each traversed edge; files
without them are still readable (copy assignment falls back to search).

Schemes: header line, `rot <vertex>: ...` lines giving each cyclic edge
order, then `sig <x> <y>: +1|-1` lines.  Edge-side vertices are written
`e{i,j,k}` (plus `#c` when m > 1).  Reading a written scheme reproduces it
bit-exactly.

Census: header line, then per record a `record sha256=<hex>` digest line
followed by the record's family in the format above.
"""

import hashlib
import re

from .circuits import Circuit, EmbeddingSet
from .exceptions import FormatError
from .levi import HypergraphSpec, YVertex, build_levi
from .scheme import EmbeddingScheme

SET_HEADER = "# kn3-embedding-set v1"
SCHEME_HEADER = "# kn3-scheme v1"
CENSUS_HEADER = "# kn3-census v1"

_Y_NAME = re.compile(r"^e\{(\d+(?:,\d+)*)\}(?:#(\d+))?$")


def format_set(s: EmbeddingSet) -> str:
    lines = [SET_HEADER, f"n={s.n} m={s.m} orientable={1 if s.strong else 0}"]
    for c in s.circuits:
        lines.append(f"T {c.excluded}: " + " ".join(str(v) for v in c.seq))
    if s.m > 1 and all(c.copy_labels is not None for c in s.circuits):
        for c in s.circuits:
            lines.append(f"L {c.excluded}: " + " ".join(str(v) for v in c.copy_labels))
    return "\n".join(lines) + "\n"


def _meta_int(fields: dict[str, str], key: str, line: int) -> int:
    if key not in fields:
        raise FormatError(f"metadata line missing '{key}='", line)
    try:
        return int(fields[key])
    except ValueError:
        raise FormatError(f"bad integer for '{key}'", line) from None


def parse_set(text: str) -> EmbeddingSet:
    lines = text.splitlines()
    if not lines or lines[0].strip() != SET_HEADER:
        raise FormatError(
            f"expected header {SET_HEADER!r}", 1 if lines else None
        )
    if len(lines) < 2:
        raise FormatError("missing metadata line", 2)
    fields = {}
    for token in lines[1].split():
        if "=" not in token:
            raise FormatError(f"bad metadata token {token!r}", 2)
        key, _, value = token.partition("=")
        fields[key] = value
    n = _meta_int(fields, "n", 2)
    m = _meta_int(fields, "m", 2)
    orientable = _meta_int(fields, "orientable", 2)

    seqs: dict[int, tuple[int, ...]] = {}
    labels: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(lines[2:], start=3):
        line = raw.strip()
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        if kind not in ("T", "L"):
            raise FormatError(f"unexpected line {line!r}", lineno)
        head, _, body = rest.partition(":")
        try:
            idx = int(head.strip())
            values = tuple(int(v) for v in body.split())
        except ValueError:
            raise FormatError(f"bad circuit line {line!r}", lineno) from None
        target = seqs if kind == "T" else labels
        if idx in target:
            raise FormatError(f"duplicate {kind} line for {idx}", lineno)
        target[idx] = values

    if sorted(seqs) != list(range(1, n + 1)):
        raise FormatError(f"expected T lines for 1..{n}, got {sorted(seqs)}")
    if labels and sorted(labels) != list(range(1, n + 1)):
        raise FormatError("L lines must cover all circuits or none")
    circuits = []
    for i in range(1, n + 1):
        lab = labels.get(i)
        if lab is not None and len(lab) != len(seqs[i]):
            raise FormatError(f"L {i} has {len(lab)} labels for {len(seqs[i])} edges")
        circuits.append(Circuit(i, n, m, seqs[i], lab))
    return EmbeddingSet(n=n, m=m, circuits=tuple(circuits), strong=bool(orientable))


def _y_name(y: YVertex, m: int) -> str:
    triple, c = y
    name = "e{" + ",".join(str(v) for v in triple) + "}"
    return name if m == 1 else f"{name}#{c}"


def _parse_vertex(token: str, m: int, lineno: int):
    match = _Y_NAME.match(token)
    if match:
        triple = tuple(int(v) for v in match.group(1).split(","))
        if len(triple) != 3 or sorted(triple) != list(triple):
            raise FormatError(f"bad triple in {token!r}", lineno)
        copy = int(match.group(2)) if match.group(2) else 0
        return (triple, copy)
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"bad vertex token {token!r}", lineno) from None


def format_scheme(sch: EmbeddingScheme) -> str:
    m = sch.graph.m
    lines = [SCHEME_HEADER]
    for x in sch.graph.x_vertices:
        names = " ".join(_y_name(e[1], m) for e in sch.rotation[x])
        lines.append(f"rot {x}: {names}")
    for y in sch.graph.y_vertices:
        names = " ".join(str(e[0]) for e in sch.rotation[y])
        lines.append(f"rot {_y_name(y, m)}: {names}")
    for x, y in sch.graph.edges():
        sign = "+1" if sch.signature[(x, y)] == 1 else "-1"
        lines.append(f"sig {x} {_y_name(y, m)}: {sign}")
    return "\n".join(lines) + "\n"


def parse_scheme(text: str) -> EmbeddingScheme:
    lines = text.splitlines()
    if not lines or lines[0].strip() != SCHEME_HEADER:
        raise FormatError(f"expected header {SCHEME_HEADER!r}", 1 if lines else None)
    rot_tokens: dict[object, tuple[str, list[str], int]] = {}
    sig_tokens: list[tuple[str, str, str, int]] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("rot "):
            head, _, body = line[4:].partition(":")
            rot_tokens[head.strip()] = (head.strip(), body.split(), lineno)
        elif line.startswith("sig "):
            head, _, body = line[4:].partition(":")
            parts = head.split()
            if len(parts) != 2:
                raise FormatError(f"bad sig line {line!r}", lineno)
            sig_tokens.append((parts[0], parts[1], body.strip(), lineno))
        else:
            raise FormatError(f"unexpected line {line!r}", lineno)

    x_names = [name for name in rot_tokens if not name.startswith("e")]
    try:
        x_labels = sorted(int(v) for v in x_names)
    except ValueError as exc:
        raise FormatError(f"bad vertex name: {exc}") from None
    n = len(x_labels)
    if x_labels != list(range(1, n + 1)):
        raise FormatError(f"rot lines must cover vertices 1..n, got {x_labels}")
    copies = [
        int(m.group(2))
        for name in rot_tokens
        if (m := _Y_NAME.match(name)) and m.group(2)
    ]
    m_mult = max(copies) + 1 if copies else 1
    graph = build_levi(HypergraphSpec(n, m_mult))

    rotation: dict = {}
    for name, (head, tokens, lineno) in rot_tokens.items():
        v = _parse_vertex(head, m_mult, lineno)
        if isinstance(v, int):
            rot = tuple((v, _parse_vertex(t, m_mult, lineno)) for t in tokens)
            for _, y in rot:
                if not isinstance(y, tuple):
                    raise FormatError("rotation at a vertex must list edge names", lineno)
        else:
            rot = tuple((int(t), v) for t in tokens)
        rotation[v] = rot

    expected = set(graph.x_vertices) | set(graph.y_vertices)
    if set(rotation) != expected:
        raise FormatError("rot lines do not match the Levi graph of the inferred (n, m)")
    for x, y in graph.edges():
        if (x, y) not in rotation[x] or (x, y) not in rotation[y]:
            raise FormatError(f"edge {x}-{_y_name(y, m_mult)} missing from a rotation")
    for v, rot in rotation.items():
        if len(set(rot)) != len(rot):
            raise FormatError(f"rotation at {v} repeats an edge")

    signature: dict = {}
    for x_tok, y_tok, val, lineno in sig_tokens:
        x = _parse_vertex(x_tok, m_mult, lineno)
        y = _parse_vertex(y_tok, m_mult, lineno)
        if not isinstance(x, int) or isinstance(y, int):
            raise FormatError("sig line must name a vertex then an edge name", lineno)
        if val not in ("+1", "-1"):
            raise FormatError(f"bad signature value {val!r}", lineno)
        signature[(x, y)] = 1 if val == "+1" else -1
    missing = [e for e in graph.edges() if e not in signature]
    if missing:
        raise FormatError(f"{len(missing)} edges missing a sig line")
    return EmbeddingScheme(graph=graph, rotation=rotation, signature=signature)


def _digest(record: str) -> str:
    return hashlib.sha256(record.encode()).hexdigest()


def format_census(families) -> str:
    chunks = [CENSUS_HEADER + "\n"]
    for s in families:
        record = format_set(s)
        chunks.append(f"record sha256={_digest(record)}\n{record}")
    return "\n".join(chunks)


def parse_census(text: str) -> list[EmbeddingSet]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CENSUS_HEADER:
        raise FormatError(f"expected header {CENSUS_HEADER!r}", 1 if lines else None)
    out = []
    idx = 1
    while idx < len(lines):
        line = lines[idx].strip()
        if not line:
            idx += 1
            continue
        if not line.startswith("record sha256="):
            raise FormatError(f"expected a record digest line, got {line!r}", idx + 1)
        digest = line.partition("=")[2].strip()
        body = []
        idx += 1
        while idx < len(lines) and lines[idx].strip() and not lines[idx].startswith("record "):
            body.append(lines[idx])
            idx += 1
        record = "\n".join(body) + "\n"
        if _digest(record) != digest:
            raise FormatError(f"digest mismatch for record ending at line {idx}")
        out.append(parse_set(record))
    return out
