"""Cyclic bar construction of truncated polynomial monoids.

The l-simplices of the cyclic bar construction of a pointed monoid are
(l+1)-fold smash powers: an (l+1)-tuple of monoid elements, identified to
the basepoint as soon as one entry is the monoid zero.  For the truncated
monoid every nonzero element is a power of x, so a simplex is stored as
its exponent tuple (a_0, ..., a_l) with 0 <= a_j <= k-1, or the shared
``BASEPOINT`` sentinel.

Structure maps:

* ``face(s, idx)`` multiplies entries idx, idx+1; the last face wraps
  around and multiplies the final entry into the front one,
  (a_0, ..., a_l) -> (a_l + a_0, a_1, ..., a_{l-1}).  A product that
  overflows the truncation collapses the whole simplex to the basepoint.
* ``degeneracy(s, idx)`` inserts a unit (exponent 0) after position idx.
* ``cyclic(s)`` rotates the tuple one step to the right.

Every map either preserves the entry sum or hits the basepoint, so the
construction splits as a wedge over the total weight i.  A simplex is
degenerate exactly when some entry past position 0 is the unit; weight
i >= 1 therefore lives in degrees <= i, with the single top simplex
(0, 1, ..., 1), and weight 0 is just the unit 0-simplex.
"""

from dataclasses import dataclass, field

from .monoid import BASEPOINT, truncated_monoid

__all__ = [
    "BASEPOINT",
    "CyclicBar",
    "WeightComponent",
    "simplex_weight",
    "is_degenerate",
    "identity_violations",
    "identity_report",
]


def simplex_weight(s):
    """Sum of the exponents, or None for the basepoint simplex."""
    if s is BASEPOINT:
        return None
    return sum(s)


def is_degenerate(s):
    """True when the simplex is a degeneracy, i.e. has a unit past slot 0.

    An entry a_j = 0 with j >= 1 exhibits the simplex as s_{j-1} of the
    tuple with that entry removed; conversely degeneracies only ever
    insert units after slot 0.  The basepoint counts as nondegenerate
    (it is the basepoint in every degree, not a degeneracy of anything
    interesting).
    """
    if s is BASEPOINT:
        return False
    return any(a == 0 for a in s[1:])


@dataclass(frozen=True)
class WeightComponent:
    """The simplices of one weight summand, listed per degree.

    ``simplices_by_degree[l]`` holds the nondegenerate l-simplices of total
    weight ``i`` in lexicographic order; trailing empty degrees are
    trimmed, so for a component enumerated without a degree cap the last
    populated degree of weight i >= 1 is exactly i.
    """

    k: int
    i: int
    simplices_by_degree: tuple = field(default=())

    @property
    def top_degree(self):
        return len(self.simplices_by_degree) - 1

    def degree_counts(self):
        return [len(block) for block in self.simplices_by_degree]

    def alternating_count(self):
        """Sum of (-1)^l over all listed simplices; 0 except in weight 0."""
        return sum(
            len(block) if l % 2 == 0 else -len(block)
            for l, block in enumerate(self.simplices_by_degree)
        )

    def simplices(self):
        """Iterate pairs (degree, simplex) in degree-then-lex order."""
        for l, block in enumerate(self.simplices_by_degree):
            for s in block:
                yield l, s

    def __repr__(self):
        return (
            f"WeightComponent(k={self.k}, i={self.i}, "
            f"counts={self.degree_counts()})"
        )


class CyclicBar:
    """Cyclic bar construction of the truncated monoid with x^k = 0."""

    def __init__(self, k):
        self.monoid = truncated_monoid(k)
        self.k = k

    def __repr__(self):
        return f"CyclicBar(k={self.k})"

    def face(self, s, idx):
        """Face d_idx; 0 <= idx <= l on an l-simplex with l >= 1.

        Basepoint in, basepoint out.  A 0-simplex has no faces.
        """
        if s is BASEPOINT:
            return BASEPOINT
        top = len(s) - 1
        if top == 0:
            raise ValueError("a 0-simplex has no faces")
        if not 0 <= idx <= top:
            raise ValueError(f"face index {idx} out of range for degree {top}")
        if idx < top:
            prod = self.monoid.multiply(s[idx], s[idx + 1])
            if prod is BASEPOINT:
                return BASEPOINT
            return s[:idx] + (prod,) + s[idx + 2:]
        prod = self.monoid.multiply(s[top], s[0])
        if prod is BASEPOINT:
            return BASEPOINT
        return (prod,) + s[1:top]

    def degeneracy(self, s, idx):
        """Degeneracy s_idx: insert a unit entry after position idx."""
        if s is BASEPOINT:
            return BASEPOINT
        top = len(s) - 1
        if not 0 <= idx <= top:
            raise ValueError(f"degeneracy index {idx} out of range for degree {top}")
        return s[: idx + 1] + (0,) + s[idx + 1:]

    def cyclic(self, s):
        """Cyclic operator: rotate the tuple one step to the right."""
        if s is BASEPOINT:
            return BASEPOINT
        return s[-1:] + s[:-1]

    def enumerate_weight_component(self, i, max_degree=None):
        """All nondegenerate simplices of weight i, in degree-by-degree lex order.

        Degrees run up to ``max_degree`` (default: i, which is exhaustive;
        weight 0 needs only degree 0).  Tuples have a_0 in [0, k-1] and
        a_j in [1, k-1] for j >= 1.
        """
        if not isinstance(i, int) or i < 0:
            raise ValueError(f"weight must be a nonnegative integer, got {i!r}")
        if max_degree is None:
            max_degree = i if i >= 1 else 0
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        blocks = []
        for l in range(max_degree + 1):
            blocks.append(tuple(self._weight_tuples(i, l)))
        return WeightComponent(self.k, i, _trim(blocks))

    def _weight_tuples(self, i, l):
        # leading entry may be the unit, the rest may not
        hi = self.k - 1
        for first in range(0, min(hi, i) + 1):
            for tail in _compositions(i - first, l, hi):
                yield (first,) + tail

    def generated_cyclic_subset(self, i, max_degree=None):
        """Nondegenerate simplices reachable from the weight-i generator.

        Takes the closure of the (i-1)-simplex (1, 1, ..., 1) under faces,
        degeneracies and the cyclic operator, never leaving degrees below
        max(max_degree, i), and reports the nondegenerate members per
        degree up to ``max_degree`` (default i).  For the truncated
        monoid this recovers the full weight component; computing it by
        closure gives an independent route to the same lists.
        """
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"the generator needs weight >= 1, got {i!r}")
        if max_degree is None:
            max_degree = i
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        # the closure may need to pass through degenerate simplices one
        # degree above a target, but never above degree i
        cap = max(max_degree, i)
        start = (1,) * i
        seen = {start}
        stack = [start]
        while stack:
            s = stack.pop()
            top = len(s) - 1
            images = [self.cyclic(s)]
            if top >= 1:
                images.extend(self.face(s, a) for a in range(top + 1))
            if top + 1 <= cap:
                images.extend(self.degeneracy(s, a) for a in range(top + 1))
            for t in images:
                if t is BASEPOINT or t in seen:
                    continue
                seen.add(t)
                stack.append(t)
        blocks = [[] for _ in range(max_degree + 1)]
        for s in seen:
            l = len(s) - 1
            if l <= max_degree and not is_degenerate(s):
                blocks[l].append(s)
        return WeightComponent(self.k, i, _trim(sorted(b) for b in blocks))


def _trim(blocks):
    """Tuple-ify per-degree lists and drop trailing empty degrees."""
    out = [tuple(b) for b in blocks]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _compositions(total, parts, hi):
    """Tuples of `parts` entries in [1, hi] summing to `total`, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    # remaining entries force total into [parts, parts * hi]
    lo_first = max(1, total - (parts - 1) * hi)
    hi_first = min(hi, total - (parts - 1))
    for a in range(lo_first, hi_first + 1):
        for tail in _compositions(total - a, parts - 1, hi):
            yield (a,) + tail


def identity_violations(bar, s):
    """Instantiate every simplicial and cyclic operator identity at ``s``.

    ``s`` is a nonbasepoint l-simplex.  Compositions that pass through the
    basepoint use the absorbing convention built into the operators.  With
    d, s, t for face, degeneracy, cyclic, the relations checked are

        d_a d_b = d_{b-1} d_a            (a < b, degree >= 2)
        s_a s_b = s_{b+1} s_a            (a <= b)
        d_a s_b = s_{b-1} d_a            (a < b)
        d_a s_b = id                     (a = b, a = b+1)
        d_a s_b = s_b d_{a-1}            (a > b+1)
        t^(l+1) = id
        d_0 t = d_l,   d_a t = t d_{a-1} (1 <= a <= l)
        s_0 t = t^2 s_l,  s_a t = t s_{a-1}  (1 <= a <= l)

    Returns a list of short descriptions of failures, empty when all hold.
    """
    bad = []
    l = len(s) - 1
    d, sg, t = bar.face, bar.degeneracy, bar.cyclic

    if l >= 2:
        for b in range(1, l + 1):
            for a in range(b):
                if d(d(s, b), a) != d(d(s, a), b - 1):
                    bad.append(f"d_{a} d_{b} != d_{b-1} d_{a} at {s}")
    for b in range(l + 1):
        for a in range(b + 1):
            if sg(sg(s, b), a) != sg(sg(s, a), b + 1):
                bad.append(f"s_{a} s_{b} != s_{b+1} s_{a} at {s}")
    for b in range(l + 1):
        sb = sg(s, b)
        for a in range(l + 2):
            if a < b:
                want = sg(d(s, a), b - 1)
            elif a in (b, b + 1):
                want = s
            else:
                want = sg(d(s, a - 1), b)
            if d(sb, a) != want:
                bad.append(f"d_{a} s_{b} relation fails at {s}")
    r = s
    for _ in range(l + 1):
        r = t(r)
    if r != s:
        bad.append(f"t^{l + 1} != id at {s}")
    ts = t(s)
    if l >= 1:
        if d(ts, 0) != d(s, l):
            bad.append(f"d_0 t != d_{l} at {s}")
        for a in range(1, l + 1):
            if d(ts, a) != t(d(s, a - 1)):
                bad.append(f"d_{a} t != t d_{a-1} at {s}")
    for a in range(1, l + 1):
        if sg(ts, a) != t(sg(s, a - 1)):
            bad.append(f"s_{a} t != t s_{a-1} at {s}")
    if sg(ts, 0) != t(t(sg(s, l))):
        bad.append(f"s_0 t != t^2 s_{l} at {s}")
    return bad


def identity_report(k, max_weight):
    """Run the identity suite over every simplex of weight <= max_weight.

    Returns (simplices_checked, violations); an empty violation list means
    the operators satisfy all simplicial and cyclic relations on that range.
    """
    bar = CyclicBar(k)
    checked = 0
    violations = []
    for i in range(max_weight + 1):
        for _, s in bar.enumerate_weight_component(i).simplices():
            checked += 1
            violations.extend(identity_violations(bar, s))
    return checked, violations
