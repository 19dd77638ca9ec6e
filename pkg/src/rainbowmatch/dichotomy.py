"""The path-or-certificate dichotomy for families at the critical size.

With a family of inner-count + k - 1 members whose every k-union contains
a source-target path, either some rainbow source-target path exists or
the family is regimented.  The driver realizes this by search: rainbow
path first, regimentation second.  A TheoremViolation result is the
falsification channel and is never expected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .network import Network, NetworkFamily, has_st_path
from .paths import RainbowStPath, exhaustive_rainbow_path
from .regiment import Regimentation, find_regimentation, verify_regimentation


class UnionPathError(ValueError):
    """Some k members' union contains no source-target path."""

    def __init__(self, indices):
        super().__init__(
            f"union of members {tuple(indices)} has no source-target path")
        self.indices = tuple(indices)


@dataclass(frozen=True)
class TheoremViolation:
    """Neither a rainbow path nor a certificate was found."""

    detail: str


def dichotomy(net: Network, nf: NetworkFamily, k: int,
              path_bound: int = 8, regiment_bound: int = 6
              ) -> RainbowStPath | Regimentation | TheoremViolation:
    """Return a rainbow source-target path if one exists, else a verified
    regimentation; the hypothesis and the family size are checked first.

    The two outcomes are not mutually exclusive; the path branch is tried
    first because it is the cheap, useful one.
    """
    m = len(nf)
    if m != len(net.inner) + k - 1:
        raise ValueError("family size must be inner-count + k - 1")
    for picked in itertools.combinations(range(1, m + 1), k):
        if not has_st_path(nf.union(picked), net.source, net.target):
            raise UnionPathError(picked)
    found = exhaustive_rainbow_path(net, nf, bound=path_bound)
    if found is not None:
        return found
    certificate = find_regimentation(net, nf, bound=regiment_bound)
    if certificate is not None and verify_regimentation(net, nf, certificate) is None:
        return certificate
    return TheoremViolation(
        "no rainbow source-target path and no regimentation certificate")
