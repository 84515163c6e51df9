"""Quantum cohomology of LG(n, 2n) over Z[q], deg q = n + 1.

A quantum class is a finite map (strict partition with parts <= n, q-degree)
-> integer.  Three independent multiplication engines are provided:

* qprod_constants (route C): read the stable structure constants of the
  symmetric-function basis at indices ((n+1)^d, nu) and divide by 2^d.
* qprod_quotient (route A): multiply in n + 1 variables, expand in the basis
  there, strip parts equal to n + 1 into q-powers (each worth q/2), and kill
  indices outside the Schubert range.
* qprod_pieri (route B): expand one factor symbolically into special classes
  and q via the two-condition and Pfaffian Giambelli expressions, then fold
  the quantum Pieri rule over the other factor.

Route C is the default; A and B exist for cross-validation.
"""

from __future__ import annotations

from functools import lru_cache

from .classical import triple_number
from .partitions import (
    Partition,
    dual,
    enumerate_partitions,
    grow_strips,
    in_d,
    is_strict,
    prepend,
    rho,
    shrink_strips,
    star,
)
from .qtilde import (
    VerificationError,
    _stable_expansion,
    _universal,
    expand_in_basis,
    f_constant,
)

QuantumClass = dict  # map (Partition, d) -> int


def _require_dn(lam: Partition, n: int) -> Partition:
    lam = tuple(lam)
    if not in_d(lam, n):
        raise ValueError(f"{lam} does not index a Schubert class for n={n}")
    return lam


def _strip_top_parts(key: Partition, top: int) -> tuple[int, Partition]:
    d = 0
    while d < len(key) and key[d] == top:
        d += 1
    return d, key[d:]


def qprod_constants(lam: Partition, mu: Partition, n: int) -> QuantumClass:
    """Quantum product via stable structure constants (route C).

    Every expansion index of the form ((n+1)^d, nu) with nu strict and parts
    <= n contributes its coefficient divided by 2^d in q-degree d.  The
    coefficient must be a positive multiple of 2^d; anything else falsifies
    the theory and raises."""
    lam, mu = _require_dn(lam, n), _require_dn(mu, n)
    out: QuantumClass = {}
    for key, c in _stable_expansion(lam, mu).items():
        if key and key[0] > n + 1:
            continue
        d, rest = _strip_top_parts(key, n + 1)
        if not in_d(rest, n):
            continue
        if c < 0 or c % (1 << d):
            raise VerificationError(
                f"coefficient {c} at {key} is not a nonnegative multiple of 2^{d}"
            )
        out[(rest, d)] = c >> d
    return out


def qprod_quotient(lam: Partition, mu: Partition, n: int) -> QuantumClass:
    """Quantum product via the quotient presentation in n + 1 variables
    (route A)."""
    lam, mu = _require_dn(lam, n), _require_dn(mu, n)
    m = n + 1
    prod = _universal(lam).truncate(m) * _universal(mu).truncate(m)
    out: QuantumClass = {}
    for key, c in expand_in_basis(prod).items():
        d, rest = _strip_top_parts(key, m)
        if not in_d(rest, n):
            continue
        if c % (1 << d):
            raise VerificationError(f"coefficient {c} at {key} not divisible by 2^{d}")
        out[(rest, d)] = c >> d
    return out


def quantum_pieri(x: QuantumClass, k: int, n: int) -> QuantumClass:
    """Multiply a quantum class by the special class of degree k, 0 <= k <= n.

    Classical part: horizontal-strip extensions inside the Schubert range,
    weighted by 2 to the number of strip components off the first column.
    Quantum part: strict sub-partitions a horizontal strip of size n + 1 - k
    below, weighted by 2 to (components - 1), in one q-degree higher."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= {n}, got {k}")
    out: QuantumClass = {}

    def add(key, v):
        w = out.get(key, 0) + v
        if w:
            out[key] = w
        else:
            del out[key]

    for (lam, d), c in x.items():
        for strip in grow_strips(lam, k, cap=n):
            if is_strict(strip.shape):
                add((strip.shape, d), c << strip.off_first_column)
        for nu, comps in shrink_strips(lam, n + 1 - k):
            add((nu, d + 1), c << (comps - 1))
    return out


def _special_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for (ia, qa), ca in x.items():
        for (ib, qb), cb in y.items():
            key = (tuple(sorted(ia + ib, reverse=True)), qa + qb)
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def _two_row_special(i: int, j: int, n: int) -> dict:
    """Symbolic expression of a two-condition class in the special classes
    sigma_1..sigma_n and q, from the quantum two-condition Giambelli
    rearrangement (i > j > 0)."""
    terms: dict = {((i, j), 0): 1}
    for k in range(1, n - i + 1):
        t = j - k
        if t < 0:
            break
        idx = (i + k, t) if t else (i + k,)
        terms[(idx, 0)] = terms.get((idx, 0), 0) + 2 * (-1) ** k
    s = i + j - n - 1
    if s >= 0:
        idx = (s,) if s else ()
        terms[(idx, 1)] = terms.get((idx, 1), 0) + (-1) ** (n + 1 - i)
    return {key: c for key, c in terms.items() if c}


@lru_cache(maxsize=None)
def giambelli_special(mu: Partition, n: int) -> dict:
    """Polynomial in the special classes and q whose quantum evaluation is
    the Schubert class of mu: rows are special classes, two-row classes come
    from the quantum two-condition formula, longer ones from the Pfaffian
    recursion with all products expanded symbolically."""
    mu = _require_dn(tuple(mu), n)
    ell = len(mu)
    if ell == 0:
        return {((), 0): 1}
    if ell == 1:
        return {((mu[0],), 0): 1}
    if ell == 2:
        return _two_row_special(mu[0], mu[1], n)
    r = 2 * ((ell + 1) // 2)
    seq = mu + (0,) * (r - ell)
    acc: dict = {}
    sign = 1
    for j in range(r - 1):
        if seq[r - 1]:
            pair = _two_row_special(seq[j], seq[r - 1], n)
        else:
            pair = {((seq[j],), 0): 1}
        rest = tuple(x for x in seq[:j] + seq[j + 1 : r - 1] if x)
        for key, c in _special_mul(pair, giambelli_special(rest, n)).items():
            v = acc.get(key, 0) + sign * c
            if v:
                acc[key] = v
            else:
                del acc[key]
        sign = -sign
    return acc


def qprod_pieri(lam: Partition, mu: Partition, n: int) -> QuantumClass:
    """Quantum product via Giambelli and the quantum Pieri rule (route B)."""
    lam, mu = _require_dn(lam, n), _require_dn(mu, n)
    out: QuantumClass = {}
    for (indices, qp), c in giambelli_special(mu, n).items():
        cls: QuantumClass = {(lam, 0): 1}
        for k in indices:  # stored descending; fold order is fixed
            cls = quantum_pieri(cls, k, n)
        for (nu, d), v in cls.items():
            key = (nu, d + qp)
            w = out.get(key, 0) + c * v
            if w:
                out[key] = w
            else:
                del out[key]
    return out


def gw(lam: Partition, mu: Partition, nu: Partition, d: int, n: int) -> int:
    """Three-point genus-zero invariant of degree d: zero unless the weights
    sum to n(n+1)/2 + d(n+1), else the coefficient of (dual(nu), d) in the
    quantum product of the first two classes."""
    lam, mu, nu = (_require_dn(p, n) for p in (lam, mu, nu))
    if d < 0 or sum(lam) + sum(mu) + sum(nu) != n * (n + 1) // 2 + d * (n + 1):
        return 0
    return qprod_constants(lam, mu, n).get((dual(nu, n), d), 0)


def relation_check(i: int, n: int) -> bool:
    """Check the presentation relation for the i-th special class:
    sigma_i^2 + 2 sum_k (-1)^k sigma_{i+k} sigma_{i-k} = +-sigma_{2i-n-1} q."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= {n}")
    acc: QuantumClass = {}

    def add_class(cls, scale):
        for key, c in cls.items():
            v = acc.get(key, 0) + scale * c
            if v:
                acc[key] = v
            else:
                del acc[key]

    add_class(qprod_constants((i,), (i,), n), 1)
    for k in range(1, n - i + 1):
        if i - k < 0:
            break
        hi = qprod_constants((i + k,), (i - k,), n) if i - k else {((i + k,), 0): 1}
        add_class(hi, 2 * (-1) ** k)
    s = 2 * i - n - 1
    expected: QuantumClass = {}
    if s >= 0:
        expected[((s,) if s else (), 1)] = (-1) ** (n - i)
    return acc == expected


def vanishing_bounds(lam: Partition, mu: Partition, nu: Partition, d: int, n: int) -> bool:
    """Necessary window for a degree-d invariant to be nonzero."""
    ell = len(lam)
    return 0 <= d <= ell and ell + len(mu) - n <= d <= ell + len(mu) + len(nu) - n


def eightfold_check(lam: Partition, mu: Partition, nu: Partition, d: int, n: int) -> bool:
    """Check the two-to-the-power scaling between the degree-d invariant of
    (lam, mu, nu) and the degree-(len(lam)-d) invariant of the starred and
    dualized triple; for d beyond len(lam) the invariant must vanish."""
    lam, mu, nu = (_require_dn(p, n) for p in (lam, mu, nu))
    if d > len(lam):
        return gw(lam, mu, nu, d, n) == 0
    e = len(lam) - d
    lhs = (1 << (n + d)) * gw(lam, mu, nu, d, n)
    rhs = (1 << (len(mu) + len(nu) + e)) * gw(star(lam, n) if lam else (), dual(mu, n), dual(nu, n), e, n)
    return lhs == rhs


def rho_product(lam: Partition, n: int) -> QuantumClass:
    """Product with the point-adjacent class of the full staircase:
    a single term, the starred dual of lam in q-degree len(lam).  The closed
    form is asserted against the structure-constant engine."""
    lam = _require_dn(lam, n)
    expected: QuantumClass = {(star(dual(lam, n), n), len(lam)): 1}
    actual = qprod_constants(lam, rho(n), n)
    if actual != expected:
        raise VerificationError(f"staircase product failed for {lam}, n={n}: {actual}")
    return expected


def line_count_check(lam: Partition, mu: Partition, nu: Partition, n: int) -> bool:
    """Twice a degree-one invariant equals the triple intersection number of
    the same indices one rank up."""
    return 2 * gw(lam, mu, nu, 1, n) == triple_number(lam, mu, nu, n + 1)


def sigma_ij_product_check(i: int, j: int, n: int) -> bool:
    """Check the closed product of two special classes when i + j >= n + 1:
    sigma_{i,j} (absent when i = j) plus 2 sum_k sigma_{i+k, j-k} plus
    sigma_{i+j-n-1} q."""
    if not (1 <= j <= i <= n and i + j >= n + 1):
        raise ValueError("need 1 <= j <= i <= n with i + j >= n + 1")
    expected: QuantumClass = {}
    if i > j:
        expected[((i, j), 0)] = 1
    for k in range(1, n - i + 1):
        idx = (i + k, j - k) if j - k else (i + k,)
        expected[(idx, 0)] = expected.get((idx, 0), 0) + 2
    s = i + j - n - 1
    expected[((s,) if s else (), 1)] = 1
    return qprod_constants((i,), (j,), n) == expected


def _dn_of_weight(w: int, n: int) -> list[Partition]:
    if w < 0:
        return []
    return enumerate_partitions(w, n, strict=True)


def qlr_check(lam: Partition, mu: Partition, n: int) -> bool:
    """Check the closed quantum Littlewood-Richardson expressions for a
    second factor with two or three rows: classical constants in degree 0,
    halved prepended constants in degree 1, and rescaled constants of the
    starred factor in the top degrees."""
    lam, mu = _require_dn(lam, n), _require_dn(mu, n)
    if len(mu) not in (2, 3):
        raise ValueError("second factor must have two or three rows")
    w0 = sum(lam) + sum(mu)
    sc = _stable_expansion(lam, mu)
    expected: QuantumClass = {}
    for nu in _dn_of_weight(w0, n):
        c = sc.get(nu, 0)
        if c:
            expected[(nu, 0)] = c
    for nu in _dn_of_weight(w0 - (n + 1), n):
        c = sc.get(prepend(n + 1, 1, nu), 0)
        if c:
            if c % 2:
                raise VerificationError(f"odd degree-1 coefficient {c}")
            expected[(nu, 1)] = c // 2
    mu_star = star(mu, n)
    if len(mu) == 2:
        for nu in _dn_of_weight(w0 - 2 * (n + 1), n):
            c = f_constant(nu, mu_star, lam)
            if c:
                expected[(nu, 2)] = c
    else:
        for nu in _dn_of_weight(w0 - 2 * (n + 1), n):
            c = f_constant(nu, mu_star, prepend(n + 1, 1, lam))
            if c:
                expected[(nu, 2)] = c
        for nu in _dn_of_weight(w0 - 3 * (n + 1), n):
            c = f_constant(nu, mu_star, lam)
            if c:
                expected[(nu, 3)] = c
    return expected == qprod_constants(lam, mu, n)


def fform_check(lam: Partition, mu: Partition, n: int) -> bool:
    """Check the rescaled-constant expressions for quantum structure
    constants: every degree-d coefficient equals the f-constant of
    (nu, mu-star; ((n+1)^e, lam)) with d + e = len(mu), and for a two-row mu
    the degree-one constants match the starred classical identity."""
    lam, mu = _require_dn(lam, n), _require_dn(mu, n)
    if not mu:
        raise ValueError("second factor must be nonempty")
    actual = qprod_constants(lam, mu, n)
    ell_mu = len(mu)
    if any(d > ell_mu for (_, d) in actual):
        return False
    mu_star = star(mu, n)
    for d in range(ell_mu + 1):
        e = ell_mu - d
        w = sum(lam) + sum(mu) - d * (n + 1)
        for nu in _dn_of_weight(w, n):
            if actual.get((nu, d), 0) != f_constant(nu, mu_star, prepend(n + 1, e, lam)):
                return False
    if ell_mu == 2:
        base = _stable_expansion(lam, mu)
        w1 = sum(lam) + sum(mu) - (n + 1)
        for nu in _dn_of_weight(w1, n):
            lhs = base.get(prepend(n + 1, 1, nu), 0)
            rhs = _stable_expansion(nu, mu_star).get(prepend(n + 1, 1, lam), 0)
            t = len(lam) - len(nu)
            if lhs * (1 << max(0, -t)) != rhs * (1 << max(0, t)):
                return False
    return True


def quantum_to_json(x: QuantumClass) -> dict[str, int]:
    """Serialize as {'3,1|2': c}; the empty partition serializes as ''."""
    items = sorted(x.items(), key=lambda kv: (kv[0][1], kv[0][0]))
    return {f"{','.join(map(str, lam))}|{d}": c for (lam, d), c in items}


def quantum_from_json(data: dict[str, int]) -> QuantumClass:
    out: QuantumClass = {}
    for key, c in data.items():
        lam_s, d_s = key.rsplit("|", 1)
        lam = tuple(int(t) for t in lam_s.split(",")) if lam_s else ()
        out[(lam, int(d_s))] = c
    return out
