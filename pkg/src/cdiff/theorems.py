"""Registry of claim rows about the c-differential uniformity of power maps,
each with an applicability predicate and a prediction, checked against the
exhaustive counting engine.

Exact rows sweep every c satisfying their condition (a single c could mask a
counterexample at these field sizes).  Upper-bound rows additionally record
the attained maximum, distinguishing a tight bound from a vacuous one.
Value-set rows compare the union of observed uniformities over a c-sweep
against the expected set.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Union

from cdiff.field import Field, build_field, DEFAULT_SIZE_CAP
from cdiff.ddt import power_uniformity, _power_tables


# ---------------------------------------------------------------------------
# Predictions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Exact:
    value: int

    def check(self, observed) -> bool:
        return observed == self.value

    def render(self) -> str:
        return f"= {self.value}"


@dataclass(frozen=True)
class UpperBound:
    value: int

    def check(self, observed) -> bool:
        return observed <= self.value

    def render(self) -> str:
        return f"<= {self.value}"


@dataclass(frozen=True)
class ValueSet:
    values: frozenset[int]

    def check(self, observed) -> bool:
        return set(observed) == set(self.values)

    def render(self) -> str:
        return "= {" + ",".join(str(v) for v in sorted(self.values)) + "}"


Prediction = Union[Exact, UpperBound, ValueSet]


# ---------------------------------------------------------------------------
# Instances and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Instance:
    """One concrete check: a field, an exponent, and either a single c or a
    c-sweep whose observed-value set is compared as a whole."""
    p: int
    n: int
    d: int
    k: int | None
    c: int | None                      # canonical encoding; None = aggregated sweep
    c_label: str
    predicted: Prediction
    c_values: tuple[int, ...] | None = None


@dataclass(frozen=True)
class InstanceResult:
    instance: Instance
    observed: int | tuple[int, ...]
    ok: bool


@dataclass(frozen=True)
class VerificationReport:
    case_id: str
    passed: bool
    results: tuple[InstanceResult, ...]
    counterexamples: tuple[InstanceResult, ...]
    max_attained: int | None           # over UpperBound instances, if any


@dataclass(frozen=True)
class TheoremCase:
    id: str
    statement: str
    applies: Callable[[Field, int, int], bool]
    predict: Callable[[Field, int, int], Prediction | None]
    default_instances: Callable[[int], list[Instance]]


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _fexp(q: int, d: int) -> int:
    """Functional exponent: x^d and x^e agree on GF(q) iff their exponents
    match after reduction into [1, q-1] (d, e >= 1)."""
    r = d % (q - 1) if q > 2 else 0
    return r if r else q - 1


def _same_map(q: int, d1: int, d2: int) -> bool:
    return _fexp(q, d1) == _fexp(q, d2)


def _minus_one(p: int) -> int:
    return p - 1        # constant polynomial p-1


def _gold_k(field: Field, d: int) -> int | None:
    """The k in [1, n-1] with x^d = x^(p^k+1), if any."""
    for k in range(1, field.n):
        if _same_map(field.q, d, field.p**k + 1):
            return k
    return None


def _half_gold_ks(field: Field, d: int) -> list[int]:
    """All k in [1, 2n-1] with x^d = x^((p^k+1)/2) (odd p)."""
    return [k for k in range(1, 2 * field.n)
            if _same_map(field.q, d, (field.p**k + 1) // 2)]


def _c_sweep_values(field: Field, exclude: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(c for c in range(field.q) if c not in exclude)


def _fields(pairs: list[tuple[int, int]], max_size: int) -> list[Field]:
    return [build_field(p, n) for p, n in pairs if p**n <= max_size]


# ---------------------------------------------------------------------------
# Case constructors
# ---------------------------------------------------------------------------

def _case_square() -> TheoremCase:
    def applies(field, d, c):
        return field.p > 2 and _same_map(field.q, d, 2) and c != 1

    def predict(field, d, c):
        return Exact(2)

    def grid(max_size):
        out = []
        for f in _fields(_ODD_FIELDS, max_size):
            for c in range(f.q):
                if c != 1:
                    out.append(Instance(f.p, f.n, 2, None, c, "c != 1", Exact(2)))
        return out

    return TheoremCase("square", "x^2 has uniformity 2 at every c != 1 (odd p)",
                       applies, predict, grid)


def _case_inverse_c0() -> TheoremCase:
    def applies(field, d, c):
        return field.q > 2 and _same_map(field.q, d, field.q - 2) and c == 0

    def predict(field, d, c):
        return Exact(1)

    def grid(max_size):
        return [Instance(f.p, f.n, f.q - 2, None, 0, "c = 0", Exact(1))
                for f in _fields(_ALL_FIELDS, max_size) if f.q > 2]

    return TheoremCase("inverse-c0", "x^(q-2) has uniformity 1 at c = 0",
                       applies, predict, grid)


def _inverse_bin_condition(field: Field, c: int) -> bool:
    return field.trace(c) == 1 and field.trace(field.inv(c)) == 1


def _case_inverse_bin(two_case: bool) -> TheoremCase:
    cid = "inverse-bin-2" if two_case else "inverse-bin-3"
    label = "Tr(c) = Tr(1/c) = 1" if two_case else "Tr(c) = 0 or Tr(1/c) = 0"
    value = 2 if two_case else 3

    def applies(field, d, c):
        if field.p != 2 or field.n < 3 or c in (0, 1):
            return False
        if not _same_map(field.q, d, field.q - 2):
            return False
        return _inverse_bin_condition(field, c) == two_case

    def predict(field, d, c):
        return Exact(value)

    def grid(max_size):
        out = []
        for f in _fields([(2, n) for n in range(3, 9)], max_size):
            for c in range(2, f.q):
                if _inverse_bin_condition(f, c) == two_case:
                    out.append(Instance(f.p, f.n, f.q - 2, None, c, label, Exact(value)))
        return out

    return TheoremCase(cid, f"binary x^(q-2) has uniformity {value} when {label} (c != 0, 1)",
                       applies, predict, grid)


def _inverse_odd_etas(field: Field, c: int) -> tuple[int, int]:
    four = field.from_int(4)
    e1 = field.quadratic_character(field.sub(field.mul(c, c), field.mul(four, c)))
    e2 = field.quadratic_character(field.sub(1, field.mul(four, c)))
    return e1, e2


def _case_inverse_odd(two_case: bool) -> TheoremCase:
    cid = "inverse-odd-2" if two_case else "inverse-odd-3"
    label = ("eta(c^2-4c) != 1 and eta(1-4c) != 1" if two_case
             else "eta(c^2-4c) = 1 or eta(1-4c) = 1")
    value = 2 if two_case else 3

    def condition(field, c):
        e1, e2 = _inverse_odd_etas(field, c)
        return (e1 != 1 and e2 != 1) if two_case else (e1 == 1 or e2 == 1)

    def applies(field, d, c):
        if field.p == 2 or field.q <= 3 or c in (0, 1):
            return False
        if not _same_map(field.q, d, field.q - 2):
            return False
        return condition(field, c)

    def predict(field, d, c):
        return Exact(value)

    def grid(max_size):
        out = []
        pairs = [(p, n) for p in (3, 5, 7) for n in (1, 2, 3) if p**n > 3]
        for f in _fields(pairs, max_size):
            for c in range(2, f.q):
                if condition(f, c):
                    out.append(Instance(f.p, f.n, f.q - 2, None, c, label, Exact(value)))
        return out

    return TheoremCase(cid, f"odd-p x^(q-2) has uniformity {value} when {label} (c != 0, 1)",
                       applies, predict, grid)


def _case_gold_subfield() -> TheoremCase:
    def applies(field, d, c):
        k = _gold_k(field, d)
        if k is None or c == 1:
            return False
        return field.in_subfield(c, math.gcd(k, field.n))

    def predict(field, d, c):
        return Exact(math.gcd(d, field.q - 1))

    def grid(max_size):
        out = []
        for (p, n, k) in [(3, 2, 1), (3, 4, 2), (5, 2, 1), (7, 2, 1), (2, 4, 2), (2, 6, 3)]:
            if p**n > max_size:
                continue
            f = build_field(p, n)
            d = p**k + 1
            g = math.gcd(k, n)
            label = f"c in GF({p}^{g}), c != 1"
            for c in range(f.q):
                if c != 1 and f.in_subfield(c, g):
                    out.append(Instance(p, n, d, k, c, label,
                                        Exact(math.gcd(d, f.q - 1))))
        return out

    return TheoremCase("gold-subfield",
                       "x^(p^k+1) has uniformity gcd(d, q-1) for subfield c != 1",
                       applies, predict, grid)


def _case_gold_binary_outside() -> TheoremCase:
    def side_condition(n, k):
        dd = math.gcd(n, k)
        m = n // dd
        return m >= 3 if m % 2 == 1 else m >= 4

    def applies(field, d, c):
        if field.p != 2:
            return False
        k = _gold_k(field, d)
        if k is None or not side_condition(field.n, k):
            return False
        return not field.in_subfield(c, math.gcd(field.n, k))

    def predict(field, d, c):
        k = _gold_k(field, d)
        return Exact(2 ** math.gcd(field.n, k) + 1)

    def grid(max_size):
        pairs = [(n, k) for n in range(3, 11) for k in range(1, n)
                 if math.gcd(n, k) == 1]
        pairs += [(6, 2), (9, 3), (8, 2)]
        out = []
        for n, k in pairs:
            if 2**n > max_size:
                continue
            f = build_field(2, n)
            dd = math.gcd(n, k)
            label = f"c outside GF(2^{dd})"
            pred = Exact(2**dd + 1)
            for c in range(f.q):
                if not f.in_subfield(c, dd):
                    out.append(Instance(2, n, 2**k + 1, k, c, label, pred))
        return out

    return TheoremCase("gold-binary-outside",
                       "binary x^(2^k+1) has uniformity 2^gcd(n,k)+1 outside the gcd subfield",
                       applies, predict, grid)


def _half_gold_prediction(p: int, n: int, k: int) -> Exact:
    if (2 * n // math.gcd(2 * n, k)) % 2 == 1:
        return Exact(1)
    return Exact((p ** math.gcd(k, n) + 1) // 2)


def _case_half_gold_pcn() -> TheoremCase:
    # k = n is excluded: there x^d = x^((q+1)/2), whose Dickson map takes only
    # the values +-2 on the nonsquare-discriminant locus, so the closed form
    # overshoots (GF(9), k=2: formula 5, enumeration 3).
    def matching_k(field, d):
        ks = [k for k in _half_gold_ks(field, d) if k != field.n]
        return ks[0] if ks else None

    def applies(field, d, c):
        return (field.p > 2 and field.n >= 2 and c == _minus_one(field.p)
                and matching_k(field, d) is not None)

    def predict(field, d, c):
        k = matching_k(field, d)
        return _half_gold_prediction(field.p, field.n, k)

    def grid(max_size):
        out = []
        for p in (3, 5, 7):
            for n in (2, 3, 4):
                if p**n > max_size:
                    continue
                for k in range(1, 2 * n):
                    if k == n:
                        continue
                    out.append(Instance(p, n, (p**k + 1) // 2, k, _minus_one(p),
                                        "c = -1", _half_gold_prediction(p, n, k)))
        return out

    return TheoremCase("half-gold-pcn",
                       "x^((p^k+1)/2) at c = -1: PcN iff 2n/gcd(2n,k) is odd, "
                       "else uniformity (p^gcd(k,n)+1)/2",
                       applies, predict, grid)


_UPPER_BOUND_FIELDS = [(p, n) for p in (5, 7, 11, 13) for n in (1, 2, 3, 4)
                       if p**n <= 2500]


def _case_half_pn_plus1(refined: bool) -> TheoremCase:
    cid = "half-pn-plus1-refined" if refined else "half-pn-plus1"
    bound = 2 if refined else 4
    label = ("c != +-1, q = 1 mod 4, eta((1-c)/(1+c)) = 1" if refined
             else "c != +-1")

    def condition(field, c):
        if c in (1, _minus_one(field.p)):
            return False
        if not refined:
            return True
        if field.q % 4 != 1:
            return False
        ratio = field.mul(field.sub(1, c), field.inv(field.add(1, c)))
        return field.quadratic_character(ratio) == 1

    def applies(field, d, c):
        return (field.p > 2 and _same_map(field.q, d, (field.q + 1) // 2)
                and condition(field, c))

    def predict(field, d, c):
        return UpperBound(bound)

    def grid(max_size):
        out = []
        for f in _fields(_UPPER_BOUND_FIELDS, max_size):
            d = (f.q + 1) // 2
            for c in range(f.q):
                if condition(f, c):
                    out.append(Instance(f.p, f.n, d, None, c, label, UpperBound(bound)))
        return out

    return TheoremCase(cid, f"x^((q+1)/2) has uniformity <= {bound} when {label}",
                       applies, predict, grid)


def _case_three_n_plus_3() -> TheoremCase:
    def applies(field, d, c):
        return (field.p == 3 and field.n % 2 == 0 and field.n >= 2
                and _same_map(field.q, d, (field.q + 3) // 2)
                and c == _minus_one(3))

    def predict(field, d, c):
        return Exact(2)

    def grid(max_size):
        return [Instance(3, n, (3**n + 3) // 2, None, _minus_one(3), "c = -1", Exact(2))
                for n in (2, 4, 6) if 3**n <= max_size]

    return TheoremCase("three-n-plus-3", "x^((3^n+3)/2) is APcN at c = -1 for even n",
                       applies, predict, grid)


def _case_pn_plus_3() -> TheoremCase:
    def bound(q):
        return 3 if q % 4 == 3 else 4

    def applies(field, d, c):
        return (field.p > 3 and _same_map(field.q, d, (field.q + 3) // 2)
                and c == _minus_one(field.p))

    def predict(field, d, c):
        return UpperBound(bound(field.q))

    def grid(max_size):
        return [Instance(p, n, (p**n + 3) // 2, None, _minus_one(p), "c = -1",
                         UpperBound(bound(p**n)))
                for p, n in _UPPER_BOUND_FIELDS if p**n <= max_size]

    return TheoremCase("pn-plus-3",
                       "x^((q+3)/2) at c = -1 has uniformity <= 3 (q = 3 mod 4) or <= 4 (q = 1 mod 4), p > 3",
                       applies, predict, grid)


_PN3_VALUE_SETS = {2: frozenset({2}), 3: frozenset({3, 4}), 4: frozenset({2, 4, 5}),
                   5: frozenset({4}), 6: frozenset({4, 5})}


def _pn3_minus_one_prediction(n: int) -> Exact:
    # at n = 2 the map coincides with x^((3^2+3)/2), which is APcN at c = -1;
    # the generic value 4 starts at n = 3
    if n % 4 == 0:
        return Exact(6)
    return Exact(2) if n == 2 else Exact(4)


def _case_pn_minus_3() -> TheoremCase:
    def applies(field, d, c):
        return (field.p == 3 and field.n >= 2
                and _same_map(field.q, d, field.q - 3) and c != 1)

    def predict(field, d, c):
        if c == _minus_one(3):
            return _pn3_minus_one_prediction(field.n)
        if c == 0:
            return Exact(2)
        return UpperBound(5)

    def grid(max_size):
        out = []
        for n in range(2, 7):
            if 3**n > max_size:
                continue
            f = build_field(3, n)
            d = f.q - 3
            minus_one = _minus_one(3)
            out.append(Instance(3, n, d, None, minus_one, "c = -1",
                                _pn3_minus_one_prediction(n)))
            out.append(Instance(3, n, d, None, 0, "c = 0", Exact(2)))
            others = _c_sweep_values(f, (0, 1, minus_one))
            for c in others:
                out.append(Instance(3, n, d, None, c, "c not in {0,1,-1}", UpperBound(5)))
            out.append(Instance(3, n, d, None, None, "sweep c not in {0,1,-1}",
                                ValueSet(_PN3_VALUE_SETS[n]), c_values=others))
        return out

    return TheoremCase("pn-minus-3",
                       "x^(3^n-3): at c = -1 uniformity 6 (n = 0 mod 4), 2 (n = 2) or 4; "
                       "2 at c = 0; <= 5 otherwise, with known value sets for n = 2..6",
                       applies, predict, grid)


def _case_pn_minus_3_classical() -> TheoremCase:
    def value(n):
        if n % 2 == 1:
            return 2
        return 4 if n % 4 == 2 else 5

    def applies(field, d, c):
        if field.p != 3 or c != 1 or not _same_map(field.q, d, field.q - 3):
            return False
        n = field.n
        return (n > 1 and n % 2 == 1) or n > 2

    def predict(field, d, c):
        return Exact(value(field.n))

    def grid(max_size):
        return [Instance(3, n, 3**n - 3, None, 1, "c = 1", Exact(value(n)))
                for n in range(3, 7) if 3**n <= max_size]

    return TheoremCase("pn-minus-3-classical",
                       "x^(3^n-3) at c = 1: uniformity 2 (odd n > 1), 4 (n = 2 mod 4, n > 2), "
                       "5 (n = 0 mod 4)",
                       applies, predict, grid)


def _case_half_pn_minus_3() -> TheoremCase:
    def applies(field, d, c):
        return (field.p > 2 and field.q >= 5
                and _same_map(field.q, d, (field.q - 3) // 2)
                and c == _minus_one(field.p))

    def predict(field, d, c):
        return UpperBound(4)

    def grid(max_size):
        return [Instance(p, n, (p**n - 3) // 2, None, _minus_one(p), "c = -1",
                         UpperBound(4))
                for p, n in _UPPER_BOUND_FIELDS if p**n <= max_size]

    return TheoremCase("half-pn-minus-3", "x^((q-3)/2) at c = -1 has uniformity <= 4",
                       applies, predict, grid)


def _case_two_thirds() -> TheoremCase:
    def applies(field, d, c):
        return (field.q % 3 == 2 and c != 1
                and _same_map(field.q, d, (2 * field.q - 1) // 3))

    def predict(field, d, c):
        return UpperBound(3)

    def grid(max_size):
        out = []
        for p, n in [(5, 1), (5, 3), (11, 1), (11, 3)]:
            if p**n > max_size:
                continue
            f = build_field(p, n)
            d = (2 * f.q - 1) // 3
            for c in range(f.q):
                if c != 1:
                    out.append(Instance(p, n, d, None, c, "c != 1", UpperBound(3)))
        return out

    return TheoremCase("two-thirds",
                       "x^((2q-1)/3) has uniformity <= 3 for c != 1 (q = 2 mod 3)",
                       applies, predict, grid)


def _case_bt_rows() -> TheoremCase:
    def shape(field, d):
        if field.n % 2 == 1 and _same_map(field.q, d, (field.p**2 + 1) // 2):
            return "half-square"
        if field.n == 3 and _same_map(field.q, d, field.p**2 - field.p + 1):
            return "norm-like"
        return None

    def applies(field, d, c):
        return field.p > 2 and c == _minus_one(field.p) and shape(field, d) is not None

    def predict(field, d, c):
        return Exact(1)

    def grid(max_size):
        out = []
        for p, n in [(3, 3), (3, 5), (5, 3), (7, 1)]:
            if p**n <= max_size:
                out.append(Instance(p, n, (p**2 + 1) // 2, 2, _minus_one(p),
                                    "c = -1", Exact(1)))
        for p, n in [(3, 3), (5, 3), (7, 3)]:
            if p**n <= max_size:
                out.append(Instance(p, n, p**2 - p + 1, None, _minus_one(p),
                                    "c = -1", Exact(1)))
        return out

    return TheoremCase("bt-rows",
                       "x^((p^2+1)/2) (n odd) and x^(p^2-p+1) (n = 3) are PcN at c = -1",
                       applies, predict, grid)


_ODD_FIELDS = ([(3, n) for n in range(2, 7)] + [(5, n) for n in (1, 2, 3)]
               + [(7, 1), (7, 2), (11, 1), (13, 1)])
_ALL_FIELDS = [(2, n) for n in range(3, 11)] + _ODD_FIELDS

_REGISTRY: list[TheoremCase] = [
    _case_square(),
    _case_inverse_c0(),
    _case_inverse_bin(True),
    _case_inverse_bin(False),
    _case_inverse_odd(True),
    _case_inverse_odd(False),
    _case_gold_subfield(),
    _case_gold_binary_outside(),
    _case_half_gold_pcn(),
    _case_half_pn_plus1(False),
    _case_half_pn_plus1(True),
    _case_three_n_plus_3(),
    _case_pn_plus_3(),
    _case_pn_minus_3(),
    _case_pn_minus_3_classical(),
    _case_half_pn_minus_3(),
    _case_two_thirds(),
    _case_bt_rows(),
]


def registry() -> list[TheoremCase]:
    return list(_REGISTRY)


def case_by_id(case_id: str) -> TheoremCase:
    for case in _REGISTRY:
        if case.id == case_id:
            return case
    raise KeyError(f"unknown case id {case_id!r}")


def applicable_cases(field: Field, d: int, c: int) -> list[TheoremCase]:
    """All registry rows whose predicate holds literally at (field, d, c)."""
    return [case for case in _REGISTRY if case.applies(field, d, c)]


# ---------------------------------------------------------------------------
# Verification engine
# ---------------------------------------------------------------------------

def _evaluate_group(key, instances):
    p, n, d = key
    f = build_field(p, n)
    tables = _power_tables(f, d)
    out = []
    for inst in instances:
        if inst.c is not None:
            observed = power_uniformity(f, d, inst.c, _tables=tables).uniformity
        else:
            observed = tuple(sorted({
                power_uniformity(f, d, c, _tables=tables).uniformity
                for c in inst.c_values}))
        out.append(InstanceResult(instance=inst, observed=observed,
                                  ok=inst.predicted.check(observed)))
    return out


def verify_case(case: TheoremCase, instances: list[Instance] | None = None,
                max_size: int = DEFAULT_SIZE_CAP,
                threads: int | None = None) -> VerificationReport:
    """Check every instance of a case; reports (never raises) on prediction
    failure."""
    if instances is None:
        instances = case.default_instances(max_size)
    groups: dict[tuple, list[Instance]] = {}
    for inst in instances:
        groups.setdefault((inst.p, inst.n, inst.d), []).append(inst)
    keys = sorted(groups)
    if threads is not None and threads > 1 and len(keys) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda k: _evaluate_group(k, groups[k]), keys))
    else:
        chunks = [_evaluate_group(k, groups[k]) for k in keys]
    results = tuple(r for chunk in chunks for r in chunk)
    bad = tuple(r for r in results if not r.ok)
    ub_observed = [r.observed for r in results
                   if isinstance(r.instance.predicted, UpperBound)]
    return VerificationReport(case_id=case.id, passed=not bad, results=results,
                              counterexamples=bad,
                              max_attained=max(ub_observed) if ub_observed else None)


def verify_all(case_ids: list[str] | None = None, max_size: int = DEFAULT_SIZE_CAP,
               threads: int | None = None) -> list[VerificationReport]:
    cases = ([case_by_id(cid) for cid in case_ids] if case_ids else registry())
    return [verify_case(case, max_size=max_size, threads=threads) for case in cases]


# ---------------------------------------------------------------------------
# Table artifact
# ---------------------------------------------------------------------------

def _summarize(report: VerificationReport) -> list[dict]:
    """One row per (field, d, condition) group of a case's results."""
    groups: dict[tuple, list[InstanceResult]] = {}
    for r in report.results:
        inst = r.instance
        groups.setdefault((inst.p, inst.n, inst.d, inst.c_label,
                           inst.predicted.render()), []).append(r)
    rows = []
    for (p, n, d, label, predicted), rs in sorted(groups.items()):
        sets = set()
        for r in rs:
            if isinstance(r.observed, tuple):
                sets.update(r.observed)
            else:
                sets.add(r.observed)
        observed = "{" + ",".join(str(v) for v in sorted(sets)) + "}"
        rows.append({"case": report.case_id, "p": p, "n": n, "d": d,
                     "condition": label, "predicted": predicted,
                     "observed": observed,
                     "verdict": "pass" if all(r.ok for r in rs) else "FAIL"})
    return rows


def reproduce_table(max_size: int = DEFAULT_SIZE_CAP,
                    threads: int | None = None) -> tuple[str, list[dict]]:
    """Run every registry row over its default grid and render the verdict
    table (markdown text plus raw rows for CSV)."""
    rows = []
    for report in verify_all(max_size=max_size, threads=threads):
        rows.extend(_summarize(report))
    header = ["case", "p", "n", "d", "condition", "predicted", "observed", "verdict"]
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join(["---"] * len(header)) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(str(row[h]) for h in header) + " |")
    return "\n".join(lines) + "\n", rows
