"""Error types shared across the package.

Every computational failure that a caller may want to dispatch on carries a
stable ``name`` (used by the CLI in its error reporting) and an exit code.
"""

from __future__ import annotations


class KoszulError(Exception):
    """Base class for failures of the algebra engine."""

    exit_code = 1

    @property
    def name(self) -> str:
        return type(self).__name__


class AmbientMismatch(KoszulError):
    """Vectors or maps live in free modules of different ranks."""


class NotAGroebnerBasis(KoszulError):
    """An S-polynomial of the claimed basis did not reduce to zero."""


class PowerExhausted(KoszulError):
    """No annihilating power up to k_max exists for the requested sequence.

    Either k_max is too small or the nonfree locus of the module is not
    contained in the vanishing set of the sequence.  ``nonfree_ideal``
    carries generators of ann Ext^1(M, syz M) as a diagnosis.
    """

    def __init__(self, k_max, failures=(), nonfree_ideal=()):
        self.k_max = k_max
        self.failures = tuple(failures)
        self.nonfree_ideal = tuple(nonfree_ideal)
        detail = "; ".join(str(f) for f in self.failures)
        msg = f"no annihilating power k <= {k_max}"
        if detail:
            msg += f" ({detail})"
        if self.nonfree_ideal:
            msg += "; nonfree locus ideal: (" + ", ".join(str(g) for g in self.nonfree_ideal) + ")"
        super().__init__(msg)


class NotSplit(KoszulError):
    """The identity map has no preimage: the sequence does not split."""


class InternalSplitFailure(KoszulError):
    """A split guaranteed by the annihilation hypothesis failed (a bug)."""


class NotRegular(KoszulError):
    """The sequence is not regular on the module."""


class NotFiniteLengthLeaf(KoszulError):
    """A certificate leaf that must have finite length does not."""


class NotSystemOfParameters(KoszulError):
    """R modulo the proposed parameter sequence is not finite dimensional."""


class DegreeMismatch(KoszulError):
    """Complex degree ranges cannot be aligned for comparison."""


class SessionParseError(KoszulError):
    """A session file or certificate file failed to parse."""

    exit_code = 2
