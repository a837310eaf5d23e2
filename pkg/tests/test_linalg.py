"""Matrix layer: eigenvalues, norms, order tests, triangularity."""

import math

import numpy as np
import pytest

from bohrlab.linalg import (
    NotHermitianError,
    adjoint,
    as_complex_matrix,
    frobenius_norm,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    is_strictly_upper,
    is_upper,
    loewner_leq,
    max_abs,
    operator_norm,
    re_part,
    singular_values,
    trace_norm,
    trace_pairing,
)


def random_complex(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_hermitian(rng, n):
    a = random_complex(rng, n)
    return 0.5 * (a + a.conj().T)


class TestValidation:
    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            as_complex_matrix(np.zeros((2, 3)))

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            as_complex_matrix(np.array([[np.nan, 0], [0, 0]]))
        with pytest.raises(ValueError):
            as_complex_matrix(np.array([[np.inf, 0], [0, 0]]))

    def test_result_is_readonly_copy(self):
        src = np.zeros((2, 2))
        out = as_complex_matrix(src)
        assert out.dtype == np.complex128
        with pytest.raises(ValueError):
            out[0, 0] = 1.0
        src[0, 0] = 7.0
        assert out[0, 0] == 0.0


class TestBasics:
    def test_adjoint_involution_exact(self):
        rng = np.random.default_rng(0)
        for n in (1, 2, 5, 9):
            a = random_complex(rng, n)
            assert np.array_equal(adjoint(adjoint(a)), a)

    def test_re_part_halves_upper_entries(self):
        a = np.array([[1.0, -2.0], [0.0, 1.0]], dtype=complex)
        expected = np.array([[1.0, -1.0], [-1.0, 1.0]])
        assert max_abs(re_part(a) - expected) == 0.0

    def test_re_part_identity_fixed(self):
        assert max_abs(re_part(np.eye(4)) - np.eye(4)) == 0.0

    def test_re_part_imaginary_scalar(self):
        assert re_part(np.array([[1j]]))[0, 0] == 0.0

    def test_trace_pairing_is_entrywise_sum(self):
        rng = np.random.default_rng(1)
        a = random_complex(rng, 4)
        b = random_complex(rng, 4)
        direct = np.trace(a @ b.conj().T)
        assert abs(trace_pairing(a, b) - direct) <= 1e-12 * max(1.0, abs(direct))

    def test_trace_cyclicity(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            n = int(rng.integers(2, 9))
            a = random_complex(rng, n)
            b = random_complex(rng, n)
            scale = operator_norm(a) * operator_norm(b) * n
            gap = abs(np.trace(a @ b) - np.trace(b @ a))
            assert gap <= 1e-12 * max(1.0, scale)


class TestEigenvalues:
    def test_all_ones_3x3(self):
        values = hermitian_eigenvalues(np.ones((3, 3)))
        assert np.allclose(values, [3.0, 0.0, 0.0], atol=1e-12)

    def test_diagonal_sorted(self):
        values = hermitian_eigenvalues(np.diag([3.0, 4.0, 3.0]))
        assert np.allclose(values, [4.0, 3.0, 3.0], atol=0.0)

    def test_rank_one_outer_product(self):
        v = np.array([1.0, math.sqrt(2.0), 1.0])
        values = hermitian_eigenvalues(np.outer(v, v))
        assert np.allclose(values, [4.0, 0.0, 0.0], atol=1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_matches_lapack_on_random_hermitian(self):
        rng = np.random.default_rng(3)
        for _ in range(150):
            n = int(rng.integers(1, 12))
            h = random_hermitian(rng, n) * rng.uniform(0.1, 50.0)
            got = hermitian_eigenvalues(h)
            want = np.sort(np.linalg.eigvalsh(h))[::-1]
            scale = max(1.0, float(np.max(np.abs(want))))
            assert np.max(np.abs(got - want)) <= 1e-12 * scale

    def test_eigenvalue_sum_is_trace(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            n = int(rng.integers(1, 10))
            h = random_hermitian(rng, n)
            tr = float(np.trace(h).real)
            assert abs(float(np.sum(hermitian_eigenvalues(h))) - tr) <= 1e-10 * max(1.0, abs(tr))

    def test_eigensystem_residual_and_orthonormality(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            n = int(rng.integers(2, 10))
            h = random_hermitian(rng, n)
            values, vectors = hermitian_eigensystem(h)
            scale = max(1.0, float(np.max(np.abs(values))))
            residual = max_abs(h @ vectors - vectors * values)
            assert residual <= 1e-12 * scale
            assert max_abs(vectors.conj().T @ vectors - np.eye(n)) <= 1e-12


class TestNorms:
    def test_shift_matrix_norm_one(self):
        for n in (2, 5, 11):
            assert abs(operator_norm(np.eye(n, k=1)) - 1.0) <= 1e-14

    def test_scalar_matrix(self):
        assert abs(operator_norm(2.0 * np.eye(6)) - 2.0) <= 1e-14

    def test_trace_norm_nilpotent(self):
        assert abs(trace_norm(np.array([[0.0, 1.0], [0.0, 0.0]])) - 1.0) <= 1e-14

    def test_trace_norm_diagonal(self):
        assert abs(trace_norm(np.diag([3.0, 4.0, 3.0])) - 10.0) <= 1e-13

    def test_trace_norm_zero(self):
        assert trace_norm(np.zeros((3, 3))) == 0.0

    def test_norm_dominates_trace_and_is_dominated(self):
        rng = np.random.default_rng(6)
        for _ in range(60):
            n = int(rng.integers(1, 9))
            a = random_complex(rng, n)
            tn = trace_norm(a)
            assert tn >= abs(np.trace(a)) - 1e-10
            assert tn >= operator_norm(a) - 1e-12

    def test_singular_values_against_jacobi_route(self):
        # independent route: singular values are the square roots of the
        # eigenvalues of A*A, computed by the in-house eigensolver
        rng = np.random.default_rng(7)
        for _ in range(60):
            n = int(rng.integers(1, 9))
            a = random_complex(rng, n)
            got = singular_values(a)
            gram = hermitian_eigenvalues(a.conj().T @ a)
            want = np.sqrt(np.clip(gram, 0.0, None))
            scale = max(1.0, float(want[0]) if want.size else 0.0)
            assert np.max(np.abs(got - want)) <= 1e-10 * scale

    def test_unitary_invariance(self):
        rng = np.random.default_rng(8)
        for _ in range(40):
            n = int(rng.integers(2, 9))
            a = random_complex(rng, n)
            u, _ = np.linalg.qr(random_complex(rng, n))
            v, _ = np.linalg.qr(random_complex(rng, n))
            assert abs(operator_norm(u @ a @ v) - operator_norm(a)) <= 1e-10 * max(
                1.0, operator_norm(a)
            )

    def test_hoelder_inequality(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            n = int(rng.integers(1, 9))
            a = random_complex(rng, n)
            b = random_complex(rng, n)
            lhs = abs(np.trace(a @ b))
            mid = trace_norm(a @ b)
            rhs = trace_norm(a) * operator_norm(b)
            scale = max(1.0, rhs)
            assert lhs <= mid + 1e-10 * scale
            assert mid <= rhs + 1e-10 * scale

    def test_frobenius_matches_definition(self):
        rng = np.random.default_rng(10)
        a = random_complex(rng, 5)
        assert abs(frobenius_norm(a) - math.sqrt(float(np.sum(np.abs(a) ** 2)))) <= 1e-12


class TestLoewner:
    def test_general_gap_all_ones(self):
        n = 5
        a = np.eye(n) - 2.0 * np.triu(np.ones((n, n)), 1)
        assert loewner_leq(re_part(a), 2.0 * np.eye(n))

    def test_reflexive(self):
        rng = np.random.default_rng(11)
        h = random_hermitian(rng, 4)
        assert loewner_leq(h, h)

    def test_strict_failure(self):
        assert not loewner_leq(np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))

    def test_rejects_non_hermitian_input(self):
        with pytest.raises(NotHermitianError):
            loewner_leq(np.array([[0.0, 1.0], [0.0, 0.0]]), np.eye(2))

    def test_transitive(self):
        rng = np.random.default_rng(12)
        for _ in range(50):
            n = int(rng.integers(2, 7))
            x = random_hermitian(rng, n)
            p1 = random_complex(rng, n)
            p2 = random_complex(rng, n)
            y = x + p1 @ p1.conj().T
            z = y + p2 @ p2.conj().T
            assert loewner_leq(x, y) and loewner_leq(y, z)
            assert loewner_leq(x, z, tol=2e-10)


class TestTriangularity:
    def test_shift_is_strictly_upper(self):
        assert is_strictly_upper(np.eye(4, k=1))
        assert is_upper(np.eye(4, k=1))

    def test_identity_is_upper_not_strictly(self):
        assert not is_strictly_upper(np.eye(3))
        assert is_upper(np.eye(3))

    def test_full_matrix_is_neither(self):
        theta, k = 0.9642857142857144, 14
        m = np.array([[-theta / (2 * k), 1j * theta], [1j * theta, theta / (2 * k)]])
        assert not is_strictly_upper(m)
        assert not is_upper(m)

    def test_tolerance_is_relative(self):
        big = np.triu(np.full((3, 3), 1e12), 1)
        noisy = big.copy()
        noisy[2, 0] = 1.0
        assert is_strictly_upper(noisy)
        assert not is_strictly_upper(noisy, tol=1e-15)
