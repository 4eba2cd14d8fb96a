# Copyright 2024 Baidu, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file
# except in compliance with the License. You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed under the
# License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND,
# either express or implied. See the License for the specific language governing permissions
# and limitations under the License.

"""
This module provide exact truncated power series in the variables t^{d,mu} and hbar.

A monomial hbar^e * t^{d1,mu1} ... t^{dk,muk} has degree K = k and virtual
dimension vdim = 3e + K. A series stores exactly the monomials with
K <= degree_cap and vdim <= vdim_cap, where vdim_cap defaults to
3(genus_cap - 1) + degree_cap, i.e. every genus <= genus_cap term of degree
<= degree_cap of a log partition function. For series whose monomials all have
vdim >= 0 (tame ones do) that region is closed under products, so arithmetic
below the caps is exact.

Differentiation shifts the region where coefficients are known; each series
carries a watermark (degree mark, vdim mark) and refuses to report a
coefficient above it.
"""
import logging
from collections import defaultdict
from fractions import Fraction

from builtins import str
from future.utils import iteritems

from pygivental.exception import CapError, DimensionMismatchError
from pygivental.series.monomial import Monomial, Variable, ONE

_logger = logging.getLogger(__name__)


def vdim_cap_for(degree_cap, genus_cap):
    """Largest vdim kept by default for the given caps."""
    return 3 * (genus_cap - 1) + degree_cap


class TruncatedSeries(object):
    """
    Immutable multivariate power series over the rationals.
    """
    __slots__ = ('_n', '_degree_cap', '_genus_cap', '_vdim_cap', '_terms', '_mark')

    def __init__(self, dimension, degree_cap, genus_cap=1, terms=None, watermark=None, vdim_cap=None):
        """
        Args:
            dimension (int): number n of primary fields
            degree_cap (int): max total t-power kept
            genus_cap (int): max genus kept, hbar-free series use 1
            terms (dict): Monomial -> rational; entries outside the caps are dropped
            watermark (tuple): (degree mark, vdim mark), defaults to the caps
            vdim_cap (int): max 3e + K kept, defaults to 3(genus_cap - 1) + degree_cap
        """
        if dimension < 1:
            raise ValueError('dimension should be a positive integer.')
        if degree_cap < 0:
            raise ValueError('degree_cap should be a non-negative integer.')
        if genus_cap < 0:
            raise ValueError('genus_cap should be a non-negative integer.')
        if vdim_cap is None:
            vdim_cap = vdim_cap_for(degree_cap, genus_cap)
        self._n = dimension
        self._degree_cap = degree_cap
        self._genus_cap = genus_cap
        self._vdim_cap = vdim_cap
        if watermark is None:
            self._mark = (degree_cap, vdim_cap)
        else:
            self._mark = (min(watermark[0], degree_cap), min(watermark[1], vdim_cap))
        clean = {}
        if terms:
            for mono, coeff in iteritems(terms):
                if not coeff:
                    continue
                if mono.max_index() > dimension:
                    raise DimensionMismatchError(
                        'monomial %s uses an index above dimension %d' % (mono, dimension),
                        left=mono.max_index(), right=dimension)
                if mono.degree <= degree_cap and mono.vdim <= vdim_cap:
                    clean[mono] = clean.get(mono, 0) + Fraction(coeff)
        self._terms = dict((m, c) for m, c in iteritems(clean) if c)

    def _derive(self, terms, mark=None, caps=None):
        obj = TruncatedSeries.__new__(TruncatedSeries)
        obj._n = self._n
        obj._degree_cap, obj._genus_cap, obj._vdim_cap = caps or self.caps
        obj._terms = terms
        obj._mark = self._mark if mark is None else mark
        return obj

    # construction helpers

    @classmethod
    def zero(cls, dimension, degree_cap, genus_cap=1, vdim_cap=None):
        """the zero series"""
        return cls(dimension, degree_cap, genus_cap, vdim_cap=vdim_cap)

    @classmethod
    def constant(cls, dimension, degree_cap, genus_cap=1, value=1, vdim_cap=None):
        """a constant series"""
        return cls(dimension, degree_cap, genus_cap, {ONE: value}, vdim_cap=vdim_cap)

    @classmethod
    def variable(cls, dimension, degree_cap, genus_cap, variable, coeff=1, vdim_cap=None):
        """coeff * t^{d,mu}"""
        mono = Monomial([((variable.d, variable.mu), 1)])
        return cls(dimension, degree_cap, genus_cap, {mono: coeff}, vdim_cap=vdim_cap)

    # accessors

    @property
    def dimension(self):
        """number of primary fields"""
        return self._n

    @property
    def degree_cap(self):
        """max total t-power kept"""
        return self._degree_cap

    @property
    def genus_cap(self):
        """max genus kept"""
        return self._genus_cap

    @property
    def vdim_cap(self):
        """max 3e + K kept"""
        return self._vdim_cap

    @property
    def caps(self):
        """(degree_cap, genus_cap, vdim_cap)"""
        return (self._degree_cap, self._genus_cap, self._vdim_cap)

    @property
    def watermark(self):
        """(degree mark, vdim mark) below which coefficients are exact"""
        return self._mark

    @property
    def terms(self):
        """copy of the Monomial -> Fraction map"""
        return dict(self._terms)

    def items(self):
        """(monomial, coefficient) pairs in canonical order"""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def monomials(self):
        """stored monomials in canonical order"""
        return sorted(self._terms, key=Monomial.sort_key)

    def is_zero(self):
        """True when no coefficient is stored"""
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.monomials())

    def within_caps(self, monomial):
        """True when the monomial lies in the stored region"""
        return monomial.degree <= self._degree_cap and monomial.vdim <= self._vdim_cap

    def within_watermark(self, monomial):
        """True when the coefficient of the monomial is exact"""
        return monomial.degree <= self._mark[0] and monomial.vdim <= self._mark[1]

    def coefficient(self, monomial):
        """
        Coefficient of a monomial.

        Stored terms are bounded by degree and vdim only; a genus above the
        genus cap is refused here.

        :raise CapError: the monomial lies above the watermark or the genus cap
        """
        if monomial.genus > self._genus_cap:
            raise CapError('coefficient of %s requested above the genus cap %d' % (monomial, self._genus_cap),
                           cap=self._genus_cap, required=monomial.genus)
        if not self.within_watermark(monomial):
            raise CapError('coefficient of %s requested above the watermark %r' % (monomial, self._mark),
                           cap=self._mark, required=(monomial.degree, monomial.vdim))
        return self._terms.get(monomial, Fraction(0))

    def constant_term(self):
        """coefficient of 1"""
        return self._terms.get(ONE, Fraction(0))

    # arithmetic

    def _check(self, other):
        if self._n != other._n:
            raise DimensionMismatchError('cannot combine series of dimension %d and %d' % (self._n, other._n),
                                         left=self._n, right=other._n)

    def _joint(self, other):
        caps = (min(self._degree_cap, other._degree_cap),
                min(self._genus_cap, other._genus_cap),
                min(self._vdim_cap, other._vdim_cap))
        mark = (min(self._mark[0], other._mark[0], caps[0]),
                min(self._mark[1], other._mark[1], caps[2]))
        return caps, mark

    def add(self, other):
        """coefficientwise sum"""
        self._check(other)
        caps, mark = self._joint(other)
        out = {}
        for source in (self._terms, other._terms):
            for mono, coeff in iteritems(source):
                if mono.degree <= caps[0] and mono.vdim <= caps[2]:
                    value = out.get(mono, 0) + coeff
                    if value:
                        out[mono] = value
                    else:
                        out.pop(mono, None)
        return self._derive(out, mark, caps)

    def scale(self, factor):
        """multiply every coefficient by a rational"""
        factor = Fraction(factor)
        if not factor:
            return self._derive({})
        return self._derive(dict((mono, coeff * factor) for mono, coeff in iteritems(self._terms)))

    def sub(self, other):
        """coefficientwise difference"""
        return self.add(other.scale(-1))

    def _buckets(self):
        buckets = defaultdict(list)
        for mono, coeff in iteritems(self._terms):
            buckets[(mono.degree, mono.vdim)].append((mono, coeff))
        return buckets

    def mul(self, other):
        """truncated convolution product"""
        self._check(other)
        caps, mark = self._joint(other)
        out = defaultdict(Fraction)
        right = other._buckets()
        for (ka, va), terms_a in iteritems(self._buckets()):
            for (kb, vb), terms_b in iteritems(right):
                if ka + kb > caps[0] or va + vb > caps[2]:
                    continue
                for ma, ca in terms_a:
                    for mb, cb in terms_b:
                        out[ma * mb] += ca * cb
        return self._derive(dict((m, c) for m, c in iteritems(out) if c), mark, caps)

    def mul_monomial(self, monomial, coeff=1):
        """
        Multiply by coeff * monomial; the watermark moves up with the monomial.
        """
        coeff = Fraction(coeff)
        out = {}
        if coeff:
            for mono, value in iteritems(self._terms):
                product = mono * monomial
                if product.degree <= self._degree_cap and product.vdim <= self._vdim_cap:
                    out[product] = value * coeff
        mark = (min(self._mark[0] + monomial.degree, self._degree_cap),
                min(self._mark[1] + monomial.vdim, self._vdim_cap))
        return self._derive(out, mark)

    def partial(self, variable):
        """
        Formal partial derivative by a t-variable.

        The watermark drops by one in degree and one in vdim.
        """
        if variable.is_hbar:
            raise ValueError('partial derivative is only taken in t-variables.')
        out = {}
        for mono, coeff in iteritems(self._terms):
            power, rest = mono.without(variable)
            if power:
                out[rest] = out.get(rest, 0) + coeff * power
        return self._derive(out, (self._mark[0] - 1, self._mark[1] - 1))

    def truncate(self, degree_cap=None, genus_cap=None, vdim_cap=None):
        """Copy with caps lowered to the given values."""
        degree_cap = self._degree_cap if degree_cap is None else min(degree_cap, self._degree_cap)
        genus_cap = self._genus_cap if genus_cap is None else min(genus_cap, self._genus_cap)
        if vdim_cap is None:
            vdim_cap = min(self._vdim_cap, vdim_cap_for(degree_cap, genus_cap))
        else:
            vdim_cap = min(vdim_cap, self._vdim_cap)
        return TruncatedSeries(self._n, degree_cap, genus_cap, self._terms, self._mark, vdim_cap)

    def with_watermark(self, watermark):
        """Copy whose reliable region is the intersection with the given marks."""
        mark = (min(watermark[0], self._mark[0]), min(watermark[1], self._mark[1]))
        return self._derive(dict(self._terms), mark)

    def with_exact_region(self, region):
        """
        Copy whose watermark is set to the region (capped by the caps).

        Only for results whose exactness on the region is known from a
        grading argument rather than from the marks of their inputs.
        """
        mark = (min(region[0], self._degree_cap), min(region[1], self._vdim_cap))
        return self._derive(dict(self._terms), mark)

    def reliable_part(self):
        """The terms below the watermark."""
        return self.filter(self.within_watermark)

    def filter(self, predicate):
        """Keep the terms whose monomial satisfies predicate."""
        return self._derive(dict((m, c) for m, c in iteritems(self._terms) if predicate(m)))

    def hbar_part(self, power):
        """hbar-free series formed by the coefficient of hbar^power."""
        out = {}
        for mono, coeff in iteritems(self._terms):
            if mono.hbar_power == power:
                out[mono.times_hbar(-power)] = coeff
        return TruncatedSeries(self._n, self._degree_cap, 1, out)

    def times_hbar(self, k):
        """Multiply by hbar^k."""
        return self.mul_monomial(ONE.times_hbar(k))

    def _iteration_bound(self):
        return self._degree_cap + max(self._vdim_cap, 0) // 3 + 2

    def _nilpotent_check(self, what):
        for mono in self._terms:
            if mono.degree == 0 and mono.hbar_power <= 0:
                raise ValueError('%s needs a series without t-free terms of hbar power <= 0, found %s'
                                 % (what, mono))

    def _geometric(self, first, ratio, weight, what):
        """sum_k first * ratio^k * weight(k) until the powers vanish"""
        total = first
        term = first
        k = 0
        bound = self._iteration_bound()
        while True:
            k += 1
            term = term.mul(ratio)
            if term.is_zero():
                return total
            if k > bound:
                raise CapError('%s did not terminate within %d terms' % (what, bound), cap=bound)
            total = total.add(term.scale(weight(k)))

    def exp(self):
        """
        exp(a) = sum a^k / k!.

        :raise ValueError: a has a t-free term at hbar power <= 0
        """
        self._nilpotent_check('exp')
        one = self._derive({ONE: Fraction(1)})
        total = one
        term = one
        k = 0
        bound = self._iteration_bound()
        while True:
            k += 1
            term = term.mul(self).scale(Fraction(1, k))
            if term.is_zero():
                return total
            if k > bound:
                raise CapError('exp did not terminate within %d terms' % bound, cap=bound)
            total = total.add(term)

    def log(self):
        """
        log(a) = sum (-1)^{k+1} (a - 1)^k / k.

        :raise ValueError: constant term of a is not 1
        """
        if self.constant_term() != 1:
            raise ValueError('log needs constant term 1, found %s' % self.constant_term())
        b = self.add(self._derive({ONE: Fraction(-1)}))
        b._nilpotent_check('log')
        return self._geometric(b, b, lambda k: Fraction((-1) ** k, k + 1), 'log')

    def reciprocal(self):
        """
        1 / a for a series with non-zero constant term.

        :raise ValueError: constant term is zero
        """
        c = self.constant_term()
        if not c:
            raise ValueError('reciprocal needs a non-zero constant term.')
        rest = self.add(self._derive({ONE: -c})).scale(Fraction(-1) / c)
        rest._nilpotent_check('reciprocal')
        first = self._derive({ONE: Fraction(1) / c})
        return self._geometric(first, rest, lambda k: 1, 'reciprocal')

    def substitute(self, mapping):
        """
        Replace t-variables by series.

        Args:
            mapping (dict): Variable -> TruncatedSeries; variables not in the
                mapping stay as they are

        The result has the caps of self intersected with those of the images.
        """
        caps, mark = self.caps, self._mark
        for image in mapping.values():
            self._check(image)
            caps = (min(caps[0], image.degree_cap), min(caps[1], image.genus_cap),
                    min(caps[2], image.vdim_cap))
            mark = (min(mark[0], image.watermark[0]), min(mark[1], image.watermark[1]))
        powers = {}

        def power(variable, p):
            key = (variable, p)
            if key not in powers:
                if p == 1:
                    powers[key] = mapping[variable].truncate(caps[0], caps[1], caps[2])
                else:
                    powers[key] = power(variable, p - 1).mul(mapping[variable])
            return powers[key]

        total = self._derive({}, mark, caps)
        for mono, coeff in self.items():
            kept = []
            factor = None
            for d, mu, p in mono.triples:
                variable = Variable(d, mu)
                if variable in mapping:
                    piece = power(variable, p)
                    factor = piece if factor is None else factor.mul(piece)
                else:
                    kept.append(((d, mu), p))
            head = Monomial(kept, mono.hbar_power)
            if factor is None:
                term = self._derive({head: coeff}, mark, caps) if head.degree <= caps[0] \
                    and head.vdim <= caps[2] else self._derive({}, mark, caps)
            else:
                term = factor.mul_monomial(head, coeff).with_watermark(mark)
            total = total.add(term)
        return total

    def is_tame(self):
        """every monomial satisfies weighted degree <= 3g - 3 + k"""
        return all(mono.is_tame() for mono in self._terms)

    def difference_within(self, other, degree_mark, vdim_mark):
        """
        Monomial -> (self coefficient, other coefficient) for every disagreement
        in the region degree <= degree_mark, vdim <= vdim_mark.

        :raise CapError: the region is not below both watermarks
        """
        self._check(other)
        for series in (self, other):
            if degree_mark > series._mark[0] or vdim_mark > series._mark[1]:
                raise CapError('comparison region %r exceeds watermark %r'
                               % ((degree_mark, vdim_mark), series._mark),
                               cap=series._mark, required=(degree_mark, vdim_mark))
        out = {}
        for mono in set(self._terms) | set(other._terms):
            if mono.degree <= degree_mark and mono.vdim <= vdim_mark:
                a = self._terms.get(mono, Fraction(0))
                b = other._terms.get(mono, Fraction(0))
                if a != b:
                    out[mono] = (a, b)
        return out

    def equals_within(self, other, degree_mark, vdim_mark):
        """True when both series agree on the region."""
        return not self.difference_within(other, degree_mark, vdim_mark)

    # operator sugar

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.mul(other)
        return self.scale(other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._n == other._n and self.caps == other.caps and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        body = ' + '.join('%s*%s' % (c, m) for m, c in self.items()[:6])
        if len(self._terms) > 6:
            body += ' + ...'
        return 'TruncatedSeries(n=%d, caps=%r, %s)' % (self._n, self.caps, body or '0')


def add(a, b):
    """a + b"""
    return a.add(b)


def mul(a, b):
    """a * b"""
    return a.mul(b)


def exp(a):
    """exp(a)"""
    return a.exp()


def log(a):
    """log(a)"""
    return a.log()


def partial(a, variable):
    """da/dvariable"""
    return a.partial(variable)


def coefficient(a, monomial):
    """coefficient of monomial in a"""
    return a.coefficient(monomial)


def is_tame(a):
    """tameness of a log-partition-function shaped series"""
    return a.is_tame()
