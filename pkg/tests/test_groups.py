from fractions import Fraction
from itertools import combinations

import pytest

from gradedseries.cyclofield import CyclotomicMatrix, CyclotomicNumber, FieldFraction
from gradedseries.cyclotomic import gorenstein_symmetry, is_cyclotomic
from gradedseries.exact import Poly, expand, normalize, one_minus_power
from gradedseries.groups import (
    CapExceededError,
    IndexMismatchError,
    NonRationalResultError,
    PROVENANCE_USER,
    TooLargeError,
    TraceAssignment,
    VERDICT_FULL,
    VERDICT_NEITHER,
    VERDICT_QUASI_BIREFLECTION,
    assign_charpoly_traces,
    classical_bireflection_rank,
    classify_pole,
    closure,
    generated_by_quasi_bireflections,
    hdet,
    molien,
    reciprocal_charpoly_trace,
    subgroups,
)

z = CyclotomicNumber.zeta(3)


def P(*coeffs):
    return Poly(coeffs)


def sklyanin_generators():
    """Order-3 parameter choices generating the full order-27 symmetry group."""
    g1 = CyclotomicMatrix([[z, 0, 0], [0, z ** 2, 0], [0, 0, 1]])
    g2 = CyclotomicMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]], order=3)
    g3 = CyclotomicMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]], order=3)
    return g1, g2, g3


def mystic_matrix():
    return CyclotomicMatrix([[0, -1, 0], [1, 0, 0], [0, 0, -1]])


def shape(matrix):
    """diagonal / the two monomial 3-cycle patterns, for family bookkeeping."""
    support = frozenset(
        (i, j) for i, row in enumerate(matrix.rows)
        for j, x in enumerate(row) if x)
    if support == frozenset({(0, 0), (1, 1), (2, 2)}):
        return "diagonal"
    if support == frozenset({(0, 1), (1, 2), (2, 0)}):
        return "cycle-up"
    if support == frozenset({(0, 2), (1, 0), (2, 1)}):
        return "cycle-down"
    return "other"


class TestClosure:
    def test_sklyanin_order_27(self):
        g1, g2, g3 = sklyanin_generators()
        group = closure([g1, g2, g3], cap=100)
        assert group.order == 27

    def test_mystic_order_4(self):
        group = closure([mystic_matrix()], cap=10)
        assert group.order == 4

    def test_trivial(self):
        group = closure([], dim=3)
        assert group.order == 1

    def test_cap(self):
        rot = CyclotomicMatrix([[CyclotomicNumber.zeta(12), 0], [0, 1]])
        with pytest.raises(CapExceededError):
            closure([rot], cap=5)


class TestSubgroups:
    def test_cyclic_three(self):
        _, g2, _ = sklyanin_generators()
        group = closure([g2], cap=10)
        assert len(subgroups(group)) == 2

    def test_sklyanin_inventory(self):
        group = closure(list(sklyanin_generators()), cap=30)
        subs = subgroups(group)
        orders = sorted(s.order for s in subs)
        assert orders == [1] + [3] * 13 + [9] * 4 + [27]
        for s in subs:
            assert group.order % s.order == 0  # Lagrange
        # the four order-9 subgroups: one all-diagonal, three containing cycles
        nines = [s for s in subs if s.order == 9]
        diagonal = [s for s in nines
                    if all(shape(m) == "diagonal" for m in s.elements)]
        mixed = [s for s in nines
                 if any(shape(m) in ("cycle-up", "cycle-down") for m in s.elements)]
        assert len(diagonal) == 1 and len(mixed) == 3
        # order-3 families: 4 diagonal, 9 mixing the two cycle shapes
        threes = [s for s in subs if s.order == 3]
        diag3 = [s for s in threes
                 if all(shape(m) == "diagonal" for m in s.elements)]
        mixed3 = [s for s in threes
                  if {shape(m) for m in s.elements} ==
                  {"diagonal", "cycle-up", "cycle-down"}]
        assert len(diag3) == 4 and len(mixed3) == 9

    def test_against_pair_closure_oracle(self):
        # every subgroup of a group of order p^3 is generated by <= 2 elements
        group = closure(list(sklyanin_generators()), cap=30)
        oracle = {frozenset({0})}
        for i in range(group.order):
            oracle.add(group.subset_closure({i}))
        for i, j in combinations(range(group.order), 2):
            oracle.add(group.subset_closure({i, j}))
        subs = subgroups(group)
        assert {frozenset(group.index_of(m) for m in s.elements)
                for s in subs} == oracle

    def test_too_large(self):
        group = closure([], dim=2)
        with pytest.raises(TooLargeError):
            subgroups(group, max_order=0)


class TestTraceRule:
    def test_identity(self):
        trace = reciprocal_charpoly_trace(CyclotomicMatrix.identity(3))
        assert trace == normalize(P(1), P(1, -1) ** 3)

    def test_cycle_is_quasi_bireflection_trace(self):
        _, g2, _ = sklyanin_generators()
        assert reciprocal_charpoly_trace(g2) == normalize(P(1), one_minus_power(3))

    def test_nonscalar_diagonal(self):
        g1, _, _ = sklyanin_generators()
        assert reciprocal_charpoly_trace(g1) == normalize(P(1), one_minus_power(3))

    def test_scalar_matrix_stays_in_field(self):
        s = CyclotomicMatrix([[z, 0, 0], [0, z, 0], [0, 0, z]])
        trace = reciprocal_charpoly_trace(s)
        assert isinstance(trace, FieldFraction)
        # 1/(1 - z t)^3 has coefficients binom(n+2, 2) z^n
        got = trace.expand(4)
        assert got[3] == 10 * z ** 3 == 10
        assert got[4] == 15 * z


class TestMolien:
    def order3_series(self):
        return normalize(P(1, -1, 1), P(1, -1) ** 2 * one_minus_power(3))

    def order9_series(self):
        return normalize(P(1, 0, 0, 1, 0, 0, 1), one_minus_power(3) ** 3)

    def full_series(self):
        return normalize(P(1, 0, 0, -1, 0, 0, 1), one_minus_power(3) ** 3)

    def test_order3_subgroup(self):
        _, g2, _ = sklyanin_generators()
        group = closure([g2], cap=10)
        got = molien(group, assign_charpoly_traces(group))
        assert got == self.order3_series()
        alt = normalize(one_minus_power(6),
                        P(1, -1) * one_minus_power(2) * one_minus_power(3) ** 2)
        assert got == alt

    def test_every_order9_subgroup(self):
        group = closure(list(sklyanin_generators()), cap=30)
        for s in subgroups(group):
            if s.order != 9:
                continue
            got = molien(s, assign_charpoly_traces(s))
            assert got == self.order9_series()
            assert got == normalize(one_minus_power(9), one_minus_power(3) ** 4)

    def test_full_group(self):
        group = closure(list(sklyanin_generators()), cap=30)
        got = molien(group, assign_charpoly_traces(group))
        assert got == self.full_series()
        displayed = normalize(
            one_minus_power(18),
            one_minus_power(3) ** 2 * one_minus_power(6) * one_minus_power(9))
        assert got == displayed
        assert is_cyclotomic(got)
        assert gorenstein_symmetry(got).symmetric

    def test_scalar_subgroup_is_third_veronese(self):
        scalars = closure([CyclotomicMatrix([[z, 0, 0], [0, z, 0], [0, 0, z]])],
                          cap=10)
        got = molien(scalars, assign_charpoly_traces(scalars))
        assert got == normalize(P(1, 7, 1).inflated(3), one_minus_power(3) ** 3)
        assert not is_cyclotomic(got)

    def test_trivial_group_gives_identity_trace(self):
        group = closure([], dim=3)
        got = molien(group, assign_charpoly_traces(group))
        assert got == normalize(P(1), P(1, -1) ** 3)

    def test_nonnegative_integer_coefficients(self):
        group = closure(list(sklyanin_generators()), cap=30)
        for s in subgroups(group):
            series = expand(molien(s, assign_charpoly_traces(s)), 15)
            assert all(isinstance(c, int) and c >= 0 for c in series)

    def test_wrong_assignment_is_rejected(self):
        # a trace that cannot belong to the group leaves the sum irrational
        neg = CyclotomicMatrix([[-1, 0], [0, -1]])
        group = closure([neg], cap=5)
        good = reciprocal_charpoly_trace(group.elements[0])
        bad = FieldFraction.reciprocal(
            [CyclotomicNumber.from_rational(1, 3), -z])
        assignment = TraceAssignment(group, (good, bad),
                                     (PROVENANCE_USER,) * 2)
        with pytest.raises(NonRationalResultError):
            molien(group, assignment)


class TestHdet:
    def test_mystic_example(self):
        trace = normalize(P(1), P(1, 1) * one_minus_power(2))
        assert hdet(trace, 3, 3) == 1

    def test_identity_trace(self):
        for d in (2, 3, 4, 5):
            trace = normalize(P(1), P(1, -1) ** d)
            assert hdet(trace, d, d) == 1

    def test_diagonal_eigenvalues(self):
        lams = [z, z ** 2, 1]
        # build prod (1 - lam t) directly
        prod = [CyclotomicNumber.from_rational(1, 3)]
        for lam in lams:
            nxt = [CyclotomicNumber.from_rational(0, 3)] * (len(prod) + 1)
            for i, c in enumerate(prod):
                nxt[i] = nxt[i] + c
                nxt[i + 1] = nxt[i + 1] - c * lam
            prod = nxt
        trace = FieldFraction.reciprocal(prod)
        det = lams[0] * lams[1] * lams[2]
        assert hdet(trace, 3, 3) == det.as_fraction() == 1

    def test_sklyanin_all_trivial(self):
        group = closure(list(sklyanin_generators()), cap=30)
        assignment = assign_charpoly_traces(group)
        for i in range(group.order):
            assert hdet(assignment[i], 3, 3) == 1

    def test_index_mismatch(self):
        trace = normalize(P(1), P(1, -1) ** 3)
        with pytest.raises(IndexMismatchError):
            hdet(trace, 3, 4)


class TestClassifyPole:
    def test_mystic_quasi_bireflection(self):
        trace = normalize(P(1), P(1, 1) * one_minus_power(2))
        got = classify_pole(trace, 3)
        assert got.pole_order == 1
        assert got.verdict == VERDICT_QUASI_BIREFLECTION

    def test_classical_bireflection_is_not_quasi(self):
        trace = normalize(P(1), P(1, 0, 1) ** 2)
        got = classify_pole(trace, 4)
        assert got.pole_order == 0
        assert got.verdict == VERDICT_NEITHER

    def test_scalar_cyclotomic_trace(self):
        s = CyclotomicMatrix([[z, 0, 0], [0, z, 0], [0, 0, z]])
        got = classify_pole(reciprocal_charpoly_trace(s), 3)
        assert got.pole_order == 0
        assert got.verdict == VERDICT_NEITHER

    def test_identity_full(self):
        trace = normalize(P(1), P(1, -1) ** 3)
        assert classify_pole(trace, 3).verdict == VERDICT_FULL

    def test_invariant_under_unit_multiplier(self):
        trace = normalize(P(1), P(1, 1) * one_minus_power(2))
        factor = normalize(P(1, 1, 1), P(1, 2))  # no zero or pole at t = 1
        scaled = trace * factor
        assert classify_pole(scaled, 3).pole_order == \
            classify_pole(trace, 3).pole_order


class TestGeneratedByQuasiBireflections:
    def test_full_group_true(self):
        group = closure(list(sklyanin_generators()), cap=30)
        verdict, witnesses = generated_by_quasi_bireflections(
            group, assign_charpoly_traces(group), 3)
        assert verdict
        assert len(witnesses) == 25  # identity + 24 quasi-bireflections

    def test_scalar_subgroup_false(self):
        scalars = closure([CyclotomicMatrix([[z, 0, 0], [0, z, 0], [0, 0, z]])],
                          cap=10)
        verdict, witnesses = generated_by_quasi_bireflections(
            scalars, assign_charpoly_traces(scalars), 3)
        assert not verdict
        assert witnesses == [0]

    def test_trivial_true(self):
        group = closure([], dim=3)
        verdict, _ = generated_by_quasi_bireflections(
            group, assign_charpoly_traces(group), 3)
        assert verdict

    def test_generation_matches_cyclotomicity_on_all_subgroups(self):
        group = closure(list(sklyanin_generators()), cap=30)
        for s in subgroups(group):
            if s.order == 1:
                continue
            assignment = assign_charpoly_traces(s)
            verdict, _ = generated_by_quasi_bireflections(s, assignment, 3)
            scalar_only = all(
                shape(m) == "diagonal" and len({x for x in m.diagonal()}) == 1
                for m in s.elements)
            assert verdict == (not scalar_only)
            fixed = molien(s, assignment)
            assert is_cyclotomic(fixed) == verdict


class TestClassicalBireflection:
    def test_double_swap(self):
        g = CyclotomicMatrix([[0, 1, 0, 0], [1, 0, 0, 0],
                              [0, 0, 0, 1], [0, 0, 1, 0]])
        assert classical_bireflection_rank(g) == (2, True)

    def test_mystic_matrix_is_not(self):
        assert classical_bireflection_rank(mystic_matrix()) == (3, False)

    def test_identity(self):
        assert classical_bireflection_rank(CyclotomicMatrix.identity(4)) == (0, True)

    def test_agrees_with_pole_verdict_for_diagonal_matrices(self):
        # on a diagonal matrix both notions count eigenvalues different from 1
        import random

        rng = random.Random(41)
        z12 = CyclotomicNumber.zeta(12)
        for _ in range(25):
            d = rng.randint(2, 5)
            lams = [z12 ** rng.randrange(12) for _ in range(d)]
            rows = [[lams[i] if i == j else 0 for j in range(d)]
                    for i in range(d)]
            g = CyclotomicMatrix(rows)
            rank, is_bireflection = classical_bireflection_rank(g)
            verdict = classify_pole(reciprocal_charpoly_trace(g), d).verdict
            assert (verdict != VERDICT_NEITHER) == is_bireflection


class TestHdetDiagonalDeterminant:
    def test_irrational_determinant(self):
        z = CyclotomicNumber.zeta(3)
        g = CyclotomicMatrix([[z, 0, 0], [0, z, 0], [0, 0, 1]])
        h = hdet(reciprocal_charpoly_trace(g), 3, 3)
        assert h == z ** 2  # the product of the eigenvalues

    def test_random_diagonal_matches_determinant(self):
        import random

        rng = random.Random(43)
        z12 = CyclotomicNumber.zeta(12)
        for _ in range(15):
            lams = [z12 ** rng.randrange(12) for _ in range(3)]
            rows = [[lams[i] if i == j else 0 for j in range(3)]
                    for i in range(3)]
            g = CyclotomicMatrix(rows)
            det = lams[0] * lams[1] * lams[2]
            h = hdet(reciprocal_charpoly_trace(g), 3, 3)
            assert h == (det.as_fraction() if det.is_rational() else det)
