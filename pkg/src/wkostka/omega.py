"""The fake-degree matrix for S_n x (Z/rZ)^n.

Two independent routes compute each entry:

* the production route sums characters of symmetric-group Young subgroups
  over double cosets, with everything staying inside Q(t);
* the oracle route works inside the wreath product itself, inducing
  characters by brute force and evaluating the defining fake-degree sum
  over Q(zeta_r)(t).

Both must agree, entry by entry; the test suite enforces this.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import (Cyclotomic, ExactError, LaurentPoly, PolyMatrix,
                    RationalFunction, ZetaPoly)
from .rpart import (Composition, ContingencyMatrix, OrderedIndex, RPartition,
                    n_star)
from .symgrp import (all_perms, block_cycle_types, char_perm_det_from_type,
                     compose, cycle_type, cycles, double_cosets, inverse,
                     intersection_elements, mn_character, sign)

COSET_N_BOUND = 6
WREATH_ORACLE_BOUND = 20000


class OmegaError(ValueError):
    pass


# -- wreath-product elements --------------------------------------------------


@dataclass(frozen=True)
class WreathElement:
    """(sigma, a): the monomial matrix e_i -> zeta^(a_i) e_(sigma(i)).

    The product applies the right factor first:
    (sigma, a)(tau, b) = (sigma tau, a o tau + b).
    """

    sigma: tuple
    colors: tuple
    r: int

    def __post_init__(self):
        if len(self.sigma) != len(self.colors):
            raise OmegaError("color vector length must match the permutation")
        object.__setattr__(self, "colors",
                           tuple(c % self.r for c in self.colors))

    @property
    def n(self) -> int:
        return len(self.sigma)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if self.r != other.r:
            raise OmegaError("mixed color orders")
        tau = other.sigma
        colors = tuple((self.colors[tau[i]] + other.colors[i]) % self.r
                       for i in range(self.n))
        return WreathElement(compose(self.sigma, tau), colors, self.r)

    def inv(self) -> "WreathElement":
        sig_inv = inverse(self.sigma)
        colors = tuple((-self.colors[sig_inv[i]]) % self.r
                       for i in range(self.n))
        return WreathElement(sig_inv, colors, self.r)

    @staticmethod
    def identity(n: int, r: int) -> "WreathElement":
        return WreathElement(tuple(range(n)), (0,) * n, r)

    def colored_cycle_type(self) -> tuple:
        """Multiset of (cycle length, color sum mod r): the conjugacy class."""
        out = []
        for cyc in cycles(self.sigma):
            out.append((len(cyc), sum(self.colors[i] for i in cyc) % self.r))
        return tuple(sorted(out, reverse=True))


def wreath_order(n: int, r: int) -> int:
    return factorial(n) * r ** n


def wreath_elements(n: int, r: int):
    """Iterate over all of S_n x (Z/rZ)^n."""
    for sigma in all_perms(n):
        for colors in itertools.product(range(r), repeat=n):
            yield WreathElement(sigma, colors, r)


def delta_value(w: WreathElement) -> Cyclotomic:
    """The order-r linear character: zeta^(sum of colors)."""
    return Cyclotomic.zeta(w.r, sum(w.colors))


def epsilon_value(w: WreathElement) -> int:
    """Pull-back of the sign character of S_n."""
    return sign(w.sigma)


def detV_value(w: WreathElement) -> Cyclotomic:
    """det on the reflection representation: epsilon * delta."""
    return delta_value(w) * epsilon_value(w)


def wreath_charpoly(w: WreathElement) -> ZetaPoly:
    """det_V(t - w) = prod over cycles (t^len - zeta^(color sum))."""
    out = ZetaPoly.from_scalar(w.r, 1)
    for length, s in w.colored_cycle_type():
        out = out * ZetaPoly.binomial(w.r, length, -Cyclotomic.zeta(w.r, s))
    return out


def _check_oracle_bound(n: int, r: int, bound: int):
    cost = n * r ** n
    if cost > bound:
        raise OmegaError(
            f"wreath oracle bound exceeded: n*r^n = {cost} > {bound}")


@lru_cache(maxsize=None)
def wreath_classes(n: int, r: int) -> tuple:
    """Conjugacy classes as (representative, size), keyed by colored type."""
    buckets: dict = {}
    for w in wreath_elements(n, r):
        key = w.colored_cycle_type()
        if key in buckets:
            buckets[key][1] += 1
        else:
            buckets[key] = [w, 1]
    return tuple((rep, size) for rep, size in
                 (buckets[k] for k in sorted(buckets)))


@lru_cache(maxsize=None)
def _wreath_group_list(n: int, r: int) -> tuple:
    return tuple(wreath_elements(n, r))


def _tilde_character(blam: RPartition, w: WreathElement) -> Cyclotomic:
    """chi~^lambda on the block subgroup: Young character twisted by the
    block-graded powers of delta."""
    m = blam.weight()
    types = block_cycle_types(w.sigma, m)
    value = 1
    for comp, rho in zip(blam.parts, types):
        value *= mn_character(comp, rho)
        if value == 0:
            return Cyclotomic.from_rational(w.r, 0)
    exp = 0
    pos = 0
    for i, size in enumerate(m.parts):
        exp += i * sum(w.colors[pos:pos + size])
        pos += size
    return Cyclotomic.zeta(w.r, exp) * value


def _stabilizes_blocks(sigma: tuple, m: Composition) -> bool:
    from .symgrp import block_of
    blocks = block_of(m)
    return all(blocks[sigma[p]] == blocks[p] for p in range(len(sigma)))


@lru_cache(maxsize=None)
def _rho_on_class(blam: RPartition, class_key: tuple, n: int, r: int) -> Cyclotomic:
    group = _wreath_group_list(n, r)
    m = blam.weight()
    # locate one element with the given colored cycle type
    w0 = None
    for rep, _ in wreath_classes(n, r):
        if rep.colored_cycle_type() == class_key:
            w0 = rep
            break
    if w0 is None:
        raise OmegaError(f"unknown class {class_key}")
    order_m = 1
    for size in m.parts:
        order_m *= factorial(size) * r ** size
    total = Cyclotomic.from_rational(r, 0)
    for g in group:
        conj = g.inv() * w0 * g
        if _stabilizes_blocks(conj.sigma, m):
            total = total + _tilde_character(blam, conj)
    return total * Fraction(1, order_m)


def rho_character(blam: RPartition, w: WreathElement,
                  bound: int = WREATH_ORACLE_BOUND) -> Cyclotomic:
    """Value at w of the irreducible character indexed by blam, computed by
    brute-force induction from the block subgroup."""
    n, r = blam.n, w.r
    if w.n != n:
        raise OmegaError("element size does not match the r-partition")
    _check_oracle_bound(n, r, bound)
    return _rho_on_class(blam, w.colored_cycle_type(), n, r)


@lru_cache(maxsize=None)
def _fake_degree_fixed(n: int, r: int) -> tuple:
    """Shared per-(n, r) data for fake-degree sums: class list with
    det_V values, characteristic polynomials, cofactors against the common
    denominator, and the numerator prefactor prod (t^(ir) - 1)."""
    classes = wreath_classes(n, r)
    charpolys = [wreath_charpoly(rep) for rep, _ in classes]
    # prefix/suffix products give each cofactor in linear time
    k = len(charpolys)
    prefix = [ZetaPoly.from_scalar(r, 1)]
    for p in charpolys:
        prefix.append(prefix[-1] * p)
    suffix = [ZetaPoly.from_scalar(r, 1)]
    for p in reversed(charpolys):
        suffix.append(suffix[-1] * p)
    cofactors = [prefix[i] * suffix[k - 1 - i] for i in range(k)]
    denominator = prefix[k]
    top = LaurentPoly.one()
    for i in range(1, n + 1):
        top = top * (LaurentPoly.t_power(i * r) - 1)
    return classes, cofactors, denominator, ZetaPoly.from_laurent(r, top)


def fake_degree(n: int, r: int, chi,
                bound: int = WREATH_ORACLE_BOUND) -> LaurentPoly:
    """The graded multiplicity generating polynomial of the class function
    chi (a callable on wreath elements with values in Q(zeta_r)):

        R(chi) = prod_i (t^(ir) - 1) / |W| * sum_w det(w) chi(w) / det(t - w)

    The result must be a polynomial with rational coefficients; anything
    else signals a bug in the caller's character values.
    """
    _check_oracle_bound(n, r, bound)
    classes, cofactors, denominator, top = _fake_degree_fixed(n, r)
    acc = ZetaPoly(r, [])
    for (rep, size), cof in zip(classes, cofactors):
        scalar = detV_value(rep) * chi(rep) * size
        if not scalar.is_zero:
            acc = acc + cof * scalar
    if acc.is_zero:
        return LaurentPoly.zero()
    num = (acc * top).exact_div(denominator)
    result = num.to_laurent() * Fraction(1, wreath_order(n, r))
    return result


@lru_cache(maxsize=None)
def omega_entry_bruteforce(lam: RPartition, mu: RPartition, r: int,
                           bound: int = WREATH_ORACLE_BOUND) -> LaurentPoly:
    """omega_(lam,mu) = t^(N*) R(rho^lam x conj(rho^mu) x conj(det_V))."""
    if lam.n != mu.n or lam.r != r or mu.r != r:
        raise OmegaError("index mismatch")
    n = lam.n

    def chi(w: WreathElement) -> Cyclotomic:
        winv = w.inv()
        return (rho_character(lam, w, bound) * rho_character(mu, winv, bound)
                * detV_value(winv))

    value = fake_degree(n, r, chi, bound).shift(n_star(n, r))
    if not value.has_nonneg_int_coeffs():
        raise OmegaError(
            f"oracle entry ({lam}, {mu}) is not in Z>=0[t]: {value}")
    return value


# -- exponents attached to a double coset -------------------------------------


def bracket(j: int, i: int, r: int) -> int:
    """The representative in [0, r-1] of (j-1) + (r-i) mod r.

    >>> bracket(1, 1, 3)
    2
    >>> bracket(3, 2, 3)
    0
    """
    return ((j - 1) + (r - i)) % r


def a_O(h: ContingencyMatrix, r: int) -> int:
    """sum over all cells of bracket(j, i) * h_(i,j)."""
    total = 0
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            total += bracket(j, i, r) * h.entry(i, j)
    return total


def b_O(lam: RPartition, mu: RPartition, h: ContingencyMatrix) -> int:
    """C(n,2) - n(lam) - n(mu) + sum_(i<r) h_(i, <=i)."""
    n = lam.n
    if h.col_sums() != lam.weight().parts or h.row_sums() != mu.weight().parts:
        raise OmegaError("contingency margins do not match the weights")
    partial = sum(h.row_prefix(i, i) for i in range(1, h.r))
    return comb(n, 2) - lam.n_value() - mu.n_value() + partial


# -- the double-coset route ----------------------------------------------------


@lru_cache(maxsize=None)
def _young_char_cache(blam: RPartition):
    m = blam.weight()

    def value(types: tuple) -> int:
        v = 1
        for comp, rho in zip(blam.parts, types):
            v *= mn_character(comp, rho)
            if v == 0:
                return 0
        return v

    return m, value


@lru_cache(maxsize=None)
def omega_entry_cosets(lam: RPartition, mu: RPartition, r: int,
                       n_bound: int = COSET_N_BOUND,
                       coset_representatives_only: bool = False) -> LaurentPoly:
    """omega_(lam,mu) through the double-coset expansion of the fake degree.

    With coset_representatives_only the inner sum over a coset is replaced
    by coset-size scaling of one representative (the summand is constant on
    each coset); the literal double sum is the default.
    """
    if lam.n != mu.n or lam.r != r or mu.r != r:
        raise OmegaError("index mismatch")
    n = lam.n
    if n > n_bound:
        raise OmegaError(f"coset route limited to n <= {n_bound}")
    m, chi_lam = _young_char_cache(lam)
    mp, chi_mu = _young_char_cache(mu)
    total = RationalFunction.zero()
    for dc in double_cosets(n, m, mp):
        tpow = r * b_O(lam, mu, dc.label)
        coefs: dict = {}
        xs = (dc.rep,) if coset_representatives_only else dc.members
        for x in xs:
            xinv = inverse(x)
            for y in intersection_elements(m, mp, x):
                c = chi_lam(block_cycle_types(y, m))
                if c == 0:
                    continue
                z = compose(xinv, compose(y, x))
                c *= chi_mu(block_cycle_types(z, mp))
                if c == 0:
                    continue
                rho = cycle_type(y)
                coefs[rho] = coefs.get(rho, 0) + c
        scale = dc.size if coset_representatives_only else 1
        for rho, c in coefs.items():
            if c:
                total = total + RationalFunction(
                    LaurentPoly.t_power(tpow, c * scale),
                    char_perm_det_from_type(rho, r))
    top = LaurentPoly.one()
    for k in range(1, n + 1):
        top = top * (LaurentPoly.t_power(k * r) - 1)
    order_m = 1
    for size in m.parts:
        order_m *= factorial(size)
    order_mp = 1
    for size in mp.parts:
        order_mp *= factorial(size)
    total = total * RationalFunction(top, order_m * order_mp)
    shift = lam.a_value() + mu.tau().a_value()
    total = total * RationalFunction.t_power(shift)
    try:
        value = total.try_to_laurent()
    except ExactError as exc:
        raise OmegaError(
            f"coset entry ({lam}, {mu}) did not reduce to a polynomial: {exc}")
    if not value.has_nonneg_int_coeffs():
        raise OmegaError(
            f"coset entry ({lam}, {mu}) is not in Z>=0[t]: {value}")
    return value


# -- assembled matrices ---------------------------------------------------------


@dataclass(frozen=True)
class OmegaMatrix:
    """The scaled fake-degree matrix over a fixed total order."""

    order: OrderedIndex
    entries: PolyMatrix
    n: int
    r: int
    method: str

    def entry(self, lam: RPartition, mu: RPartition) -> LaurentPoly:
        return self.entries.entry(lam, mu)


def omega_matrix(n: int, r: int, order: OrderedIndex,
                 method: str = "cosets",
                 coset_n_bound: int = COSET_N_BOUND,
                 wreath_bound: int = WREATH_ORACLE_BOUND) -> OmegaMatrix:
    if method == "cosets":
        entry = lambda a, b: omega_entry_cosets(a, b, r, n_bound=coset_n_bound)
    elif method == "wreath":
        entry = lambda a, b: omega_entry_bruteforce(a, b, r, bound=wreath_bound)
    else:
        raise OmegaError(f"unknown method {method!r}")
    rows = [[entry(lam, mu) for mu in order.items] for lam in order.items]
    return OmegaMatrix(order, PolyMatrix(order, rows), n, r, method)
