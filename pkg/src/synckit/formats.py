"""Text, JSON, DOT, and CSV serialization for automata, digraphs, histograms.

The text formats are deliberately primitive so that any tool can read them:

    dfa <n> <k>            digraph <n>
    <k targets of state 0> <u> <v>       (one edge per line)
    ...                    ...

All indices are 0-based.  JSON documents carry the same data plus an optional
name and metadata mapping.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .automata import Dfa
from .census import Histogram
from .digraphs import Digraph
from .errors import InputError, ParseError


def letter_name(a: int) -> str:
    """Printable name of letter index a: a, b, c, ... then l26, l27, ..."""
    if 0 <= a < 26:
        return chr(ord("a") + a)
    return f"l{a}"


def word_to_str(word) -> str:
    return "".join(letter_name(a) for a in word)


@dataclass
class AutomatonDocument:
    """A DFA plus optional name/metadata, as read from or written to disk."""

    dfa: Dfa
    name: str | None = None
    metadata: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def _int_token(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line, column) from None


def parse_automaton_text(text: str) -> AutomatonDocument:
    lines = text.splitlines()
    rows: list[tuple[int, list[str]]] = [
        (i, line.split()) for i, line in enumerate(lines, 1) if line.split()
    ]
    if not rows:
        raise ParseError("empty document", 1, 1)
    line_no, header = rows[0]
    if header[0] != "dfa":
        raise ParseError(f"expected 'dfa <n> <k>' header, got {header[0]!r}", line_no, 1)
    if len(header) != 3:
        raise ParseError("header must be 'dfa <n> <k>'", line_no, 1)
    n = _int_token(header[1], line_no, 2)
    k = _int_token(header[2], line_no, 3)
    if n < 1 or k < 1:
        raise ParseError("state and alphabet counts must be positive", line_no, 2)
    if len(rows) - 1 != n:
        raise ParseError(f"expected {n} transition rows, found {len(rows) - 1}",
                         rows[-1][0] if len(rows) > 1 else line_no, 1)
    delta = []
    for q, (line_no, tokens) in enumerate(rows[1:]):
        if len(tokens) != k:
            raise ParseError(f"state {q} needs {k} targets, found {len(tokens)}", line_no, 1)
        row = []
        for col, token in enumerate(tokens, 1):
            t = _int_token(token, line_no, col)
            if not 0 <= t < n:
                raise ParseError(f"target {t} out of range 0..{n - 1}", line_no, col)
            row.append(t)
        delta.append(tuple(row))
    return AutomatonDocument(dfa=Dfa(n, k, tuple(delta)))


def format_automaton_text(dfa: Dfa) -> str:
    lines = [f"dfa {dfa.n} {dfa.k}"]
    for row in dfa.delta:
        lines.append(" ".join(str(t) for t in row))
    return "\n".join(lines) + "\n"


def parse_digraph_text(text: str) -> Digraph:
    lines = text.splitlines()
    rows = [(i, line.split()) for i, line in enumerate(lines, 1) if line.split()]
    if not rows:
        raise ParseError("empty document", 1, 1)
    line_no, header = rows[0]
    if header[0] != "digraph" or len(header) != 2:
        raise ParseError("expected 'digraph <n>' header", line_no, 1)
    n = _int_token(header[1], line_no, 2)
    if n < 1:
        raise ParseError("vertex count must be positive", line_no, 2)
    edges = []
    for line_no, tokens in rows[1:]:
        if len(tokens) != 2:
            raise ParseError("edge lines must be '<u> <v>'", line_no, 1)
        u = _int_token(tokens[0], line_no, 1)
        v = _int_token(tokens[1], line_no, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range 0..{n - 1}", line_no, 1)
        edges.append((u, v))
    try:
        return Digraph.from_edges(n, edges)
    except InputError as exc:
        raise ParseError(str(exc), rows[0][0], 1) from exc


def format_digraph_text(d: Digraph) -> str:
    lines = [f"digraph {d.n}"]
    for u, v in sorted(d.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON documents
# ---------------------------------------------------------------------------

def parse_json_document(text: str) -> AutomatonDocument | Digraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(data, dict) or "type" not in data:
        raise ParseError("JSON document needs a 'type' field")
    if data["type"] == "dfa":
        try:
            dfa = Dfa(int(data["n"]), int(data["k"]),
                      tuple(tuple(row) for row in data["delta"]))
        except (KeyError, TypeError, InputError) as exc:
            raise ParseError(f"bad dfa document: {exc}") from exc
        return AutomatonDocument(
            dfa=dfa, name=data.get("name"), metadata=data.get("metadata") or {}
        )
    if data["type"] == "digraph":
        try:
            return Digraph.from_edges(
                int(data["n"]), [tuple(e) for e in data["edges"]]
            )
        except (KeyError, TypeError, InputError) as exc:
            raise ParseError(f"bad digraph document: {exc}") from exc
    raise ParseError(f"unknown document type {data['type']!r}")


def automaton_to_json(doc: AutomatonDocument) -> str:
    data: dict = {"type": "dfa", "n": doc.dfa.n, "k": doc.dfa.k,
                  "delta": [list(row) for row in doc.dfa.delta]}
    if doc.name:
        data["name"] = doc.name
    if doc.metadata:
        data["metadata"] = doc.metadata
    return json.dumps(data, indent=2) + "\n"


def digraph_to_json(d: Digraph, name: str | None = None) -> str:
    data: dict = {"type": "digraph", "n": d.n, "edges": [list(e) for e in sorted(d.edges)]}
    if name:
        data["name"] = name
    return json.dumps(data, indent=2) + "\n"


def parse_document(text: str) -> AutomatonDocument | Digraph:
    """Parse either serialization: JSON when the text starts with '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json_document(text)
    head = stripped.split(None, 1)[0] if stripped else ""
    if head == "digraph":
        return parse_digraph_text(text)
    return parse_automaton_text(text)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dfa_to_dot(dfa: Dfa, name: str = "automaton") -> str:
    """Graphviz rendering: states as nodes, letters as edge labels, parallel
    letters merged onto one labelled edge."""
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;"]
    for q in range(dfa.n):
        lines.append(f"  s{q} [shape=circle, label={_dot_quote(str(q))}];")
    grouped: dict[tuple[int, int], list[int]] = {}
    for q in range(dfa.n):
        for a in range(dfa.k):
            grouped.setdefault((q, dfa.delta[q][a]), []).append(a)
    for (q, t), letters in sorted(grouped.items()):
        label = ",".join(letter_name(a) for a in letters)
        lines.append(f"  s{q} -> s{t} [label={_dot_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(d: Digraph, name: str = "digraph") -> str:
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;"]
    for v in range(d.n):
        lines.append(f"  v{v} [shape=circle, label={_dot_quote(str(v))}];")
    for u, v in sorted(d.edges):
        lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# histogram CSV
# ---------------------------------------------------------------------------

def write_histogram_csv(hist: Histogram, fh) -> None:
    """Rows of ``length,count`` ascending, then the summary rows.

    The pooled bucket appears as ``below,<count>`` only when a floor is set.
    """
    for length in sorted(hist.counts):
        fh.write(f"{length},{hist.counts[length]}\n")
    if hist.floor > 0:
        fh.write(f"below,{hist.below}\n")
    fh.write(f"nonsync,{hist.nonsync}\n")
    fh.write(f"total,{hist.total}\n")


def read_histogram_csv(fh) -> Histogram:
    hist = Histogram()
    for line_no, line in enumerate(fh, 1):
        line = line.strip()
        if not line:
            continue
        key, _, value = line.partition(",")
        try:
            count = int(value)
        except ValueError:
            raise ParseError(f"bad count {value!r}", line_no, 2) from None
        if key == "below":
            hist.below = count
        elif key == "nonsync":
            hist.nonsync = count
        elif key == "total":
            hist.total = count
        else:
            hist.counts[_int_token(key, line_no, 1)] = count
    return hist
