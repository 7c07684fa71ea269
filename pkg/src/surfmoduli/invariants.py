"""Numerical invariants of minimal surfaces of general type.

The holomorphic Euler characteristic ``chi`` and the self-intersection
``ksq`` of the canonical class determine the topological Euler number and
the signature through the Noether relations

    e = 12 chi - ksq,        tau = ksq - 8 chi,

which are enforced on every instance.  When the irregularity ``q`` and the
geometric genus ``pg`` are known they must satisfy ``chi = 1 - q + pg``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SurfaceInvariants:
    chi: int
    ksq: int
    e: int
    tau: int
    q: Optional[int] = None
    pg: Optional[int] = None

    def __post_init__(self):
        if self.e != 12 * self.chi - self.ksq:
            raise ValueError("e must equal 12*chi - ksq")
        if self.tau != self.ksq - 8 * self.chi:
            raise ValueError("tau must equal ksq - 8*chi")
        if (self.q is None) != (self.pg is None):
            raise ValueError("q and pg must be given together")
        if self.q is not None:
            if self.q < 0 or self.pg < 0:
                raise ValueError("q and pg must be nonnegative")
            if self.chi != 1 - self.q + self.pg:
                raise ValueError("chi must equal 1 - q + pg")

    @staticmethod
    def from_chi_ksq(
        chi: int, ksq: int, q: Optional[int] = None, pg: Optional[int] = None
    ) -> "SurfaceInvariants":
        return SurfaceInvariants(
            chi=chi, ksq=ksq, e=12 * chi - ksq, tau=ksq - 8 * chi, q=q, pg=pg
        )

    def as_dict(self) -> dict:
        out = {"chi": self.chi, "ksq": self.ksq, "e": self.e, "tau": self.tau}
        if self.q is not None:
            out["q"] = self.q
            out["pg"] = self.pg
        return out
