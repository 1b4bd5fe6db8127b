"""Closed-form relative periodic invariants of truncated polynomial rings.

Everything here is elementary p-adic bookkeeping around one structural
fact: the periodic topological cyclic homology of F_p[x]/(x^k) relative
to the ideal (x) splits as a product over the weights i >= 1, and the
weight-i piece contributes, in each odd degree, a cyclic group

    Z/p^(v_p(i))   when i is not a multiple of k,
    Z/p^(v_p(k))   when i is a multiple of k,

and nothing in even degrees (v_p is the p-adic valuation).  The factor
for a single weight arises as the homotopy of a Tate construction
whose value is a rank-one free module over Z/p^n[t, 1/t] with |t| = -2,
generated in degree 2d for d = floor((i-1)/k); the same d governs the
homological shape of the weight component itself, which for i not a
multiple of k looks like a 2d-sphere smashed with a disjointly based
circle.

Nil-invariance verdicts fall out of the exponent pattern alone: some
factor is nonzero for every k >= 2, so the relative theory never
vanishes integrally, and after inverting p it vanishes exactly when the
exponents are bounded, which happens exactly when k is a power of p.
"""

from dataclasses import dataclass
from math import inf

from .homology import ZERO_GROUP, AbelianGroup

__all__ = [
    "CyclicFactor",
    "NilInvariance",
    "TPReport",
    "p_adic_valuation",
    "lambda_dim",
    "sphere_dim",
    "tate_cpn_homotopy",
    "weight_piece_exponent",
    "weight_piece_tp",
    "expected_reduced_homology",
    "relative_tp",
    "exponent_sup",
    "nil_invariance_report",
]

NEGATIVE_CYCLIC_REMARK = (
    "The same verdicts hold for topological negative cyclic homology: never "
    "an isomorphism integrally, an isomorphism after inverting p exactly "
    "when the truncation order is a power of p."
)


def _require_prime(p):
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"expected a prime, got {p!r}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"expected a prime, got composite {p}")
        d += 1


def _require_order(k):
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"truncation order must be an integer >= 2, got {k!r}")


def _require_weight(i):
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"weight must be a positive integer, got {i!r}")


def p_adic_valuation(p, i):
    """Largest e with p^e dividing i; i must be a nonzero positive integer."""
    _require_prime(p)
    _require_weight(i)
    e = 0
    while i % p == 0:
        i //= p
        e += 1
    return e


def lambda_dim(i, k):
    """Complex dimension d = floor((i-1)/k) attached to weight i.

    This counts how many full truncation blocks fit below i; the
    associated representation sphere has real dimension 2d.
    """
    _require_weight(i)
    _require_order(k)
    return (i - 1) // k


def sphere_dim(i, k):
    """Real dimension 2*floor((i-1)/k) of the weight-i representation sphere."""
    return 2 * lambda_dim(i, k)


def tate_cpn_homotopy(p, n, d, j):
    """Homotopy in degree j of the C_{p^n} Tate construction for weight data d.

    The full homotopy is a free rank-one module over Z/p^n[t, 1/t] with a
    generator in degree 2d and |t| = -2, hence Z/p^n in every degree of
    the generator's parity (even, since 2d is even) and 0 in odd degrees.
    n = 0 gives the zero module.
    """
    _require_prime(p)
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(d, int) or d < 0:
        raise ValueError(f"d must be a nonnegative integer, got {d!r}")
    if j % 2 == 0:
        return AbelianGroup.cyclic(p**n)
    return ZERO_GROUP


def weight_piece_exponent(p, k, i):
    """Exponent e of the odd-degree factor Z/p^e contributed by weight i."""
    _require_order(k)
    if i % k == 0:
        return p_adic_valuation(p, k)
    return p_adic_valuation(p, i)


@dataclass(frozen=True)
class CyclicFactor:
    """One weight's contribution Z/p^exponent to an odd relative degree."""

    p: int
    weight: int
    exponent: int
    multiple_of_k: bool

    @property
    def is_trivial(self):
        return self.exponent == 0

    @property
    def order(self):
        return self.p**self.exponent

    @property
    def group(self):
        return AbelianGroup.cyclic(self.order)

    def __str__(self):
        return str(self.group)


def weight_piece_tp(p, k, i, j):
    """The degree-j contribution of weight i to the relative periodic theory.

    Odd j carries Z/p^e with e from ``weight_piece_exponent`` (possibly
    e = 0, retained as an explicitly trivial factor); even j carries
    nothing.
    """
    _require_prime(p)
    _require_order(k)
    _require_weight(i)
    exponent = weight_piece_exponent(p, k, i) if j % 2 == 1 else 0
    return CyclicFactor(p, i, exponent, i % k == 0)


def expected_reduced_homology(i, k):
    """Reduced integral homology predicted for the weight-i component.

    Defined only away from multiples of k, where the component has the
    homology of S^(2d) smashed with a disjointly based circle: a single Z
    in degrees 2d and 2d+1, d = floor((i-1)/k).
    """
    _require_weight(i)
    _require_order(k)
    if i % k == 0:
        raise ValueError(
            f"weight {i} is a multiple of {k}: the sphere-smash form only "
            "covers the coprime-to-truncation weights"
        )
    d2 = sphere_dim(i, k)
    return {d2: AbelianGroup.free(1), d2 + 1: AbelianGroup.free(1)}


@dataclass(frozen=True)
class NilInvariance:
    """Verdicts on whether killing the nilpotent variable is invisible.

    ``integral_iso`` / ``p_inverted_iso`` record whether the projection
    from the truncated ring to F_p induces an isomorphism on periodic
    topological cyclic homology integrally / after inverting p, i.e.
    whether the relative theory vanishes.  ``witness_weight`` names a
    weight whose factor is nonzero (so integral_iso is always False),
    ``exponent_sup`` the supremum of all factor exponents (math.inf when
    unbounded), and ``remark`` the transfer of the verdicts to
    topological negative cyclic homology.
    """

    p: int
    k: int
    integral_iso: bool
    p_inverted_iso: bool
    witness_weight: int
    witness_exponent: int
    exponent_sup: object
    remark: str = NEGATIVE_CYCLIC_REMARK


@dataclass(frozen=True)
class TPReport:
    """A truncated factor table for one degree, plus the global verdicts.

    For odd j the true group is the product over all weights i >= 1 of
    the factor groups; the table lists i <= truncation and ``truncated``
    flags that the tail is missing (its factors follow the same two-case
    exponent rule).  For even j the group is zero and the table is
    complete and empty.
    """

    p: int
    k: int
    j: int
    truncation: int
    truncated: bool
    factors: tuple
    verdicts: NilInvariance


def relative_tp(p, k, j, truncation):
    """Tabulate the degree-j relative periodic theory through weight `truncation`."""
    _require_prime(p)
    _require_order(k)
    if not isinstance(j, int):
        raise ValueError(f"degree must be an integer, got {j!r}")
    if not isinstance(truncation, int) or truncation < 1:
        raise ValueError(f"truncation must be a positive integer, got {truncation!r}")
    if j % 2 == 1:
        factors = tuple(weight_piece_tp(p, k, i, j) for i in range(1, truncation + 1))
        truncated = True
    else:
        factors = ()
        truncated = False
    return TPReport(p, k, j, truncation, truncated, factors, nil_invariance_report(p, k))


def exponent_sup(p, k):
    """Supremum of the factor exponents over all weights; math.inf if unbounded.

    Writing k = p^r * m with p not dividing m: every exponent is at most
    r when m = 1 (and i = k attains it), while for m > 1 the weights
    p^(r+1), p^(r+2), ... avoid the multiples of k and have unbounded
    valuation.  Both branches re-check themselves: the finite one against
    a scan of all weights up to 10k, the infinite one against the first
    witness weight exceeding r.
    """
    _require_prime(p)
    _require_order(k)
    r = p_adic_valuation(p, k)
    cofactor = k // p**r
    if cofactor == 1:
        scanned = max(weight_piece_exponent(p, k, i) for i in range(1, 10 * k + 1))
        if scanned != r:
            raise AssertionError(
                f"exponent scan found {scanned}, analytic rule says {r}"
            )
        return r
    witness = p ** (r + 1)
    if witness % k == 0 or weight_piece_exponent(p, k, witness) != r + 1:
        raise AssertionError(f"weight {witness} fails to exceed exponent {r}")
    return inf


def nil_invariance_report(p, k):
    """Decide both nil-invariance questions for the pair (p, k).

    Some odd-degree factor is always nonzero (weight k when p divides k,
    weight p otherwise, the latter never a multiple of k since then k
    would be a p-free divisor of p), so integrally the relative theory
    never vanishes.  Inverting p kills the whole product exactly when the
    exponents are bounded, i.e. exactly when k is a power of p.
    """
    _require_prime(p)
    _require_order(k)
    sup = exponent_sup(p, k)
    witness = k if k % p == 0 else p
    witness_exponent = weight_piece_exponent(p, k, witness)
    if witness_exponent < 1:
        raise AssertionError(f"witness weight {witness} has trivial factor")
    return NilInvariance(
        p=p,
        k=k,
        integral_iso=False,
        p_inverted_iso=sup is not inf,
        witness_weight=witness,
        witness_exponent=witness_exponent,
        exponent_sup=sup,
    )
