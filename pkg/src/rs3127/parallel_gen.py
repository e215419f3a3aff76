"""Unrolls the serial encoder into a 20x135 GF(2) parity matrix and
schedules it as XOR3 trees, emitting a structural netlist.

Multiplying a GF(32) symbol by a constant and adding two symbols are both
GF(2)-linear in the symbol bits, so driving the encoder registers with
symbolic bit sets through the 27 shift-in cycles expresses every parity
bit as a plain XOR of information bits. The four drain cycles only move
registers and add no dependencies, so they are skipped; the result is
verified bit-for-bit against the reference encoder by the test suite.

Bit indexing (shared with the parallel encoder and framing): information
bit 5*j + i is bit i (LSB = x^0 coefficient) of message symbol j; parity
bit 5*jp + i likewise for parity symbol jp.

Netlist text format (one item per line, `#` starts a comment)::

    # rs3127 parity netlist prim=0x25 groots=1..4 maxdepth=<D>
    wire w<id> = XOR3(<ref>, <ref>, <ref>)
    out p<k> = <ref>

where <ref> is d<0..134> (information bit), w<id> (an earlier gate), or
ZERO; <k> is 0..19; gate ids are dense and ascending.

Matrix text format: header line `# rs3127 parity-matrix prim=0x25
groots=1..4`, then exactly 20 lines of 135 characters from {0,1}; row r
column c is 1 iff information bit c feeds parity bit r.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from functools import cached_property

from .gf32 import MUL, PRIMITIVE_POLY
from .rs_core import FIRST_ROOT, GENERATOR_POLY, K_SYMBOLS, N_PARITY

BITS_PER_SYMBOL = 5
N_INFO_BITS = K_SYMBOLS * BITS_PER_SYMBOL  # 135
N_PARITY_BITS = N_PARITY * BITS_PER_SYMBOL  # 20

ZERO = "ZERO"

_GROOTS = f"{FIRST_ROOT}..{FIRST_ROOT + N_PARITY - 1}"
NETLIST_HEADER_PREFIX = f"# rs3127 parity netlist prim=0x{PRIMITIVE_POLY:x} groots={_GROOTS}"
MATRIX_HEADER = f"# rs3127 parity-matrix prim=0x{PRIMITIVE_POLY:x} groots={_GROOTS}"


def _gf2_rank(masks: list[int]) -> int:
    basis: dict[int, int] = {}
    rank = 0
    for m in masks:
        while m:
            top = m.bit_length() - 1
            if top not in basis:
                basis[top] = m
                rank += 1
                break
            m ^= basis[top]
    return rank


@dataclass(frozen=True)
class ParityMatrix:
    """20 rows; row r is the set of information bits XORed into parity bit r."""

    rows: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != N_PARITY_BITS:
            raise ValueError(f"expected {N_PARITY_BITS} rows, got {len(self.rows)}")
        for r, row in enumerate(self.rows):
            if not row:
                raise ValueError(f"parity bit {r} depends on no information bit")
            if not all(0 <= t < N_INFO_BITS for t in row):
                raise ValueError(f"row {r} has an out-of-range bit index")
        if _gf2_rank(list(self.bitmasks)) != N_PARITY_BITS:
            raise ValueError("parity matrix is rank-deficient")

    @cached_property
    def bitmasks(self) -> tuple[int, ...]:
        """Each row packed into a 135-bit int (bit c set iff c in row)."""
        return tuple(sum(1 << t for t in row) for row in self.rows)

    @property
    def max_fanin(self) -> int:
        return max(len(row) for row in self.rows)


def _const_mul_forms(c: int, forms: list[int]) -> list[int]:
    """Bit forms of c * s given the bit forms of symbol s.

    Multiplication by the constant c is GF(2)-linear: output bit i is the
    XOR of the input bits j for which bit i of c * x^j is set.
    """
    cols = [MUL[c][1 << j] for j in range(BITS_PER_SYMBOL)]
    out = []
    for i in range(BITS_PER_SYMBOL):
        acc = 0
        for j in range(BITS_PER_SYMBOL):
            if (cols[j] >> i) & 1:
                acc ^= forms[j]
        out.append(acc)
    return out


def derive_parity_matrix() -> ParityMatrix:
    """Advance the encoder registers symbolically through the 27 shift-in
    cycles; the final register bit forms are the parity matrix rows."""
    regs = [[0] * BITS_PER_SYMBOL for _ in range(N_PARITY)]
    for j in range(K_SYMBOLS):
        in_forms = [1 << (BITS_PER_SYMBOL * j + i) for i in range(BITS_PER_SYMBOL)]
        fb = [in_forms[i] ^ regs[N_PARITY - 1][i] for i in range(BITS_PER_SYMBOL)]
        new_regs = []
        for d in range(N_PARITY):
            term = _const_mul_forms(GENERATOR_POLY[d], fb)
            below = regs[d - 1] if d else [0] * BITS_PER_SYMBOL
            new_regs.append([below[i] ^ term[i] for i in range(BITS_PER_SYMBOL)])
        regs = new_regs
    rows = []
    for jp in range(N_PARITY):
        # parity symbol jp is the coefficient of x^(3-jp), i.e. register 3-jp
        for i in range(BITS_PER_SYMBOL):
            mask = regs[N_PARITY - 1 - jp][i]
            rows.append(frozenset(t for t in range(N_INFO_BITS) if (mask >> t) & 1))
    return ParityMatrix(tuple(rows))


@functools.cache
def default_parity_matrix() -> ParityMatrix:
    """The matrix for the active field constants, derived once per process."""
    return derive_parity_matrix()


@dataclass(frozen=True)
class XorNetwork:
    """Acyclic netlist of 3-input XOR gates computing the 20 parity bits.

    Gate inputs and outputs are refs in the netlist grammar ("d<k>",
    "w<id>", "ZERO"); every gate references only information bits or
    earlier gates.
    """

    gates: tuple[tuple[str, str, str], ...]
    outputs: tuple[str, ...]
    depths: tuple[int, ...]

    @property
    def max_depth(self) -> int:
        return max(self.depths)

    def _ref_index(self, ref: str) -> int:
        # value slots: 0..134 inputs, 135 the ZERO constant, 136+ gates
        if ref == ZERO:
            return N_INFO_BITS
        if ref[0] == "d":
            return int(ref[1:])
        return N_INFO_BITS + 1 + int(ref[1:])

    @cached_property
    def _program(self) -> tuple[list[tuple[int, int, int, int]], list[int]]:
        steps = []
        for gid, (a, b, c) in enumerate(self.gates):
            steps.append((N_INFO_BITS + 1 + gid, self._ref_index(a),
                          self._ref_index(b), self._ref_index(c)))
        return steps, [self._ref_index(ref) for ref in self.outputs]

    def evaluate(self, info_bits: list[int]) -> list[int]:
        """Parity bits for one 135-bit input vector."""
        if len(info_bits) != N_INFO_BITS:
            raise ValueError(f"expected {N_INFO_BITS} bits, got {len(info_bits)}")
        steps, out_idx = self._program
        vals = list(info_bits) + [0] * (1 + len(self.gates))
        for dst, a, b, c in steps:
            vals[dst] = vals[a] ^ vals[b] ^ vals[c]
        return [vals[i] for i in out_idx]


def build_xor3_network(matrix: ParityMatrix) -> XorNetwork:
    """Balanced ternary tree per output row.

    Leaves are grouped left-to-right in ascending bit-index order; the last
    gate of a level is padded with ZERO when the item count is not a
    multiple of 3. Fan-in 1 yields no gates (the output is a wire).
    """
    gates: list[tuple[str, str, str]] = []
    outputs = []
    depths = []
    for row in matrix.rows:
        level = [f"d{t}" for t in sorted(row)]
        depth = 0
        while len(level) > 1:
            nxt = []
            for i in range(0, len(level), 3):
                chunk = level[i:i + 3]
                chunk += [ZERO] * (3 - len(chunk))
                gates.append((chunk[0], chunk[1], chunk[2]))
                nxt.append(f"w{len(gates) - 1}")
            level = nxt
            depth += 1
        outputs.append(level[0])
        depths.append(depth)
    return XorNetwork(tuple(gates), tuple(outputs), tuple(depths))


def emit_netlist(net: XorNetwork) -> str:
    """Canonical text form: header, gates in id order, then the 20 outputs."""
    lines = [f"{NETLIST_HEADER_PREFIX} maxdepth={net.max_depth}"]
    for gid, (a, b, c) in enumerate(net.gates):
        lines.append(f"wire w{gid} = XOR3({a}, {b}, {c})")
    for k, ref in enumerate(net.outputs):
        lines.append(f"out p{k} = {ref}")
    return "\n".join(lines) + "\n"


_WIRE_RE = re.compile(r"wire w(\d+) = XOR3\((\S+), (\S+), (\S+)\)$")
_OUT_RE = re.compile(r"out p(\d+) = (\S+)$")
_INPUT_RE = re.compile(r"d(\d+)$")


def _check_ref(ref: str, n_gates: int, lineno: int) -> None:
    if ref == ZERO:
        return
    m = _INPUT_RE.match(ref)
    if m:
        if int(m.group(1)) >= N_INFO_BITS:
            raise ValueError(f"line {lineno}: input {ref} out of range")
        return
    if ref.startswith("w") and ref[1:].isdigit():
        if int(ref[1:]) >= n_gates:
            raise ValueError(
                f"line {lineno}: reference to undefined wire {ref} "
                "(forward or cyclic reference)")
        return
    raise ValueError(f"line {lineno}: malformed reference {ref!r}")


def parse_netlist(text: str) -> XorNetwork:
    """Parse the netlist grammar back into an XorNetwork.

    Enforces dense ascending gate ids and topological order, so cycles and
    forward references are reported as undefined wires. Depths are
    recomputed from the structure.
    """
    gates: list[tuple[str, str, str]] = []
    outputs: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _WIRE_RE.match(line)
        if m:
            gid = int(m.group(1))
            if gid != len(gates):
                raise ValueError(
                    f"line {lineno}: gate ids must be dense and ascending "
                    f"(expected w{len(gates)}, got w{gid})")
            refs = m.group(2, 3, 4)
            for ref in refs:
                _check_ref(ref, len(gates), lineno)
            gates.append(refs)
            continue
        m = _OUT_RE.match(line)
        if m:
            k = int(m.group(1))
            if not 0 <= k < N_PARITY_BITS:
                raise ValueError(f"line {lineno}: output p{k} out of range")
            if k in outputs:
                raise ValueError(f"line {lineno}: output p{k} defined twice")
            _check_ref(m.group(2), len(gates), lineno)
            outputs[k] = m.group(2)
            continue
        raise ValueError(f"line {lineno}: syntax error: {raw.strip()!r}")
    missing = [k for k in range(N_PARITY_BITS) if k not in outputs]
    if missing:
        raise ValueError(f"missing outputs: {['p%d' % k for k in missing]}")
    out_refs = tuple(outputs[k] for k in range(N_PARITY_BITS))
    return XorNetwork(tuple(gates), out_refs, _structural_depths(gates, out_refs))


def _structural_depths(gates, out_refs) -> tuple[int, ...]:
    gate_depth: list[int] = []

    def ref_depth(ref: str) -> int:
        return gate_depth[int(ref[1:])] if ref[0] == "w" else 0

    for a, b, c in gates:
        gate_depth.append(1 + max(ref_depth(a), ref_depth(b), ref_depth(c)))
    return tuple(ref_depth(ref) for ref in out_refs)


def expected_depth(fanin: int) -> int:
    """Tree depth law: ceil(log3(fan-in)), with fan-in 1 a plain wire.

    Computed with integer arithmetic; float log rounds the wrong way on
    exact powers of three.
    """
    depth, cap = 0, 1
    while cap < fanin:
        cap *= 3
        depth += 1
    return depth


def matrix_to_text(matrix: ParityMatrix) -> str:
    lines = [MATRIX_HEADER]
    for row in matrix.rows:
        lines.append("".join("1" if c in row else "0" for c in range(N_INFO_BITS)))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> ParityMatrix:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if len(line) != N_INFO_BITS or set(line) - {"0", "1"}:
            raise ValueError(
                f"line {lineno}: expected {N_INFO_BITS} characters of 0/1")
        rows.append(frozenset(c for c, ch in enumerate(line) if ch == "1"))
    if len(rows) != N_PARITY_BITS:
        raise ValueError(f"expected {N_PARITY_BITS} matrix rows, got {len(rows)}")
    return ParityMatrix(tuple(rows))
