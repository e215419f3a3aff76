"""Cycle-accurate behavioral model of the serial LFSR encoder.

One 5-bit symbol moves per clock: 27 shift-in cycles perform the division
by g(x) while the message passes straight through, then 4 shift-out cycles
drain the parity registers with the feedback path disabled — 31 cycles per
codeword, matching the serial hardware.
"""

from __future__ import annotations

from .gf32 import MUL
from .rs_core import GENERATOR_POLY, K_SYMBOLS, N_SYMBOLS

SHIFT_IN = "shift-in"
SHIFT_OUT = "shift-out"


class LfsrEncoder:
    """Division-circuit registers plus a phase (cycle) counter.

    regs[d] holds the running coefficient of x^d of the remainder. The
    shift-out multiplex is modeled as a mode derived from the phase.
    """

    def __init__(self) -> None:
        self.reset()

    def reset(self) -> None:
        self.regs = [0, 0, 0, 0]
        self.phase = 0

    @property
    def mode(self) -> str:
        return SHIFT_IN if self.phase < K_SYMBOLS else SHIFT_OUT

    def cycle(self, in_symbol: int = 0) -> int:
        """Advance one clock; returns the symbol on the output port."""
        if self.phase >= N_SYMBOLS:
            raise RuntimeError("encoder cycled past phase 31 without reset")
        r0, r1, r2, r3 = self.regs
        if self.phase < K_SYMBOLS:
            f = in_symbol ^ r3
            row = MUL[f]
            self.regs = [
                row[GENERATOR_POLY[0]],
                r0 ^ row[GENERATOR_POLY[1]],
                r1 ^ row[GENERATOR_POLY[2]],
                r2 ^ row[GENERATOR_POLY[3]],
            ]
            out = in_symbol
        else:
            # feedback disabled; registers shift toward the vacated top
            self.regs = [0, r0, r1, r2]
            out = r3
        self.phase += 1
        return out

    def encode(self, msg: list[int]) -> list[int]:
        """Run exactly 31 cycles (27 shift-in + 4 shift-out) for one codeword."""
        if len(msg) != K_SYMBOLS:
            raise ValueError(f"message must have {K_SYMBOLS} symbols, got {len(msg)}")
        self.reset()
        out = [self.cycle(m) for m in msg]
        out += [self.cycle() for _ in range(N_SYMBOLS - K_SYMBOLS)]
        assert self.phase == N_SYMBOLS
        return out


def lfsr_encode(msg: list[int]) -> list[int]:
    return LfsrEncoder().encode(msg)
