import cmath
import random

import pytest

from dicirculant import fourier
from dicirculant.cayley import build_graph, validate_spec
from dicirculant.fourier import (CosetCountProfile, IntegerFunction,
                                 InvalidDivisorError, ModulusMismatchError,
                                 PreconditionViolatedError, convolve,
                                 coset_profile, dft, dft_of_set, indicator,
                                 is_transversal, is_union_of_orbits,
                                 profile_reconstruction, unit_orbits)
from dicirculant.metrics import distance_partition, is_distance_regular

TOL = 1e-9


def direct_convolution(f, g):
    m = f.modulus
    return tuple(sum(f.values[i] * g.values[(z - i) % m] for i in range(m))
                 for z in range(m))


class TestConvolution:
    def test_delta_zero_is_identity(self):
        f = IntegerFunction((3, 1, 4, 1), 4)
        assert convolve(f, indicator({0}, 4)).values == f.values

    def test_small_example(self):
        f = indicator({0, 2}, 4)
        assert convolve(f, f).values == (2, 0, 2, 0)

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatchError):
            convolve(indicator({0}, 4), indicator({0}, 6))

    def test_commutative_random(self):
        rng = random.Random(7)
        for _ in range(100):
            m = rng.randint(1, 64)
            f = IntegerFunction(tuple(rng.randint(-5, 5) for _ in range(m)), m)
            g = IntegerFunction(tuple(rng.randint(-5, 5) for _ in range(m)), m)
            assert convolve(f, g).values == convolve(g, f).values

    def test_indicator_convolution_counts_intersections(self):
        # (Delta_A * Delta_B)(i) = |(i-A) n B|
        rng = random.Random(11)
        for _ in range(50):
            m = rng.randint(1, 32)
            A = {rng.randrange(m) for _ in range(rng.randint(0, m))}
            B = {rng.randrange(m) for _ in range(rng.randint(0, m))}
            conv = convolve(indicator(A, m), indicator(B, m))
            for i in range(m):
                assert conv.values[i] == len({(i - a) % m for a in A} & B)


class TestDFT:
    def test_delta_zero_transforms_to_ones(self):
        fv = dft(indicator({0}, 6))
        assert all(abs(z - 1) < TOL for z in fv.values)

    def test_all_ones_concentrates(self):
        fv = dft(IntegerFunction((1,) * 6, 6))
        assert abs(fv.values[0] - 6) < TOL
        assert all(abs(z) < TOL for z in fv.values[1:])

    def test_small_example(self):
        fv = dft(indicator({0, 2}, 4))
        expected = (2, 0, 2, 0)
        assert all(abs(a - b) < TOL for a, b in zip(fv.values, expected))

    def test_value_at_zero_is_set_size(self):
        fv = dft_of_set({1, 3, 4}, 9)
        assert abs(fv.values[0].real - 3) < TOL
        assert abs(fv.values[0].imag) < 1e-12

    def test_convolution_theorem_random(self):
        rng = random.Random(5)
        for _ in range(200):
            m = rng.randint(1, 128)
            f = IntegerFunction(tuple(rng.randint(0, 3) for _ in range(m)), m)
            g = IntegerFunction(tuple(rng.randint(0, 3) for _ in range(m)), m)
            lhs = dft(convolve(f, g)).values
            ff, gg = dft(f).values, dft(g).values
            assert all(abs(lhs[z] - ff[z] * gg[z]) < 1e-6 * max(1, m)
                       for z in range(m))


class TestOrbits:
    def test_m6(self):
        orbits = dict(unit_orbits(6).orbits)
        assert orbits == {1: frozenset({0}), 2: frozenset({3}),
                          3: frozenset({2, 4}), 6: frozenset({1, 5})}

    def test_m4(self):
        orbits = dict(unit_orbits(4).orbits)
        assert orbits == {1: frozenset({0}), 2: frozenset({2}),
                          4: frozenset({1, 3})}

    @pytest.mark.parametrize("m", range(1, 65))
    def test_sizes_are_totients(self, m):
        from sympy import totient
        for r, members in unit_orbits(m).orbits:
            assert m % r == 0
            assert len(members) == totient(r)

    def test_union_of_orbits_has_integer_dft(self):
        # contrapositive form of the rationality lemma
        rng = random.Random(3)
        for m in range(1, 33):
            orbits = unit_orbits(m).orbits
            for _ in range(5):
                chosen = [members for _, members in orbits if rng.random() < 0.5]
                A = set().union(*chosen) if chosen else set()
                assert is_union_of_orbits(A, m)
                for z in dft_of_set(A, m).values:
                    assert abs(z.imag) < 1e-9
                    assert abs(z.real - round(z.real)) < 1e-6


class TestTransversals:
    def test_transversal_true(self):
        assert is_transversal({0, 1}, 2, 4)

    def test_transversal_false(self):
        assert not is_transversal({0, 2}, 2, 4)

    def test_invalid_divisor(self):
        with pytest.raises(InvalidDivisorError):
            is_transversal({0}, 3, 4)

    def test_transversal_vanishing(self):
        # F Delta_{0,1}(2) = 1 + w^2 = 0 for m = 4
        assert abs(dft_of_set({0, 1}, 4).values[2]) < TOL

    @pytest.mark.parametrize("m", [4, 6, 8, 9, 12])
    def test_vanishing_on_random_transversals(self, m):
        rng = random.Random(m)
        for r in range(2, m):
            if m % r:
                continue
            for _ in range(10):
                A = {i + r * rng.randrange(m // r) for i in range(r)}
                assert is_transversal(A, r, m)
                fv = dft_of_set(A, m).values
                for mult in range(1, r):
                    if mult % r == 0:
                        continue
                    z = (mult * (m // r)) % m
                    if z:
                        assert abs(fv[z]) < 1e-8


class TestCosetProfiles:
    def test_example_m6(self):
        profile = coset_profile({1, 2, 4}, 3, 6)
        assert profile == CosetCountProfile(3, (0, 2, 1))
        recon = profile_reconstruction(profile, 6)
        assert abs(recon - dft_of_set({1, 2, 4}, 6).values[2]) < TOL

    def test_example_m4(self):
        assert coset_profile({0, 1}, 2, 4).counts == (1, 1)

    def test_counts_partition_the_set(self):
        rng = random.Random(2)
        for _ in range(100):
            m = rng.randint(1, 64)
            A = {rng.randrange(m) for _ in range(rng.randint(0, m))}
            for r in range(1, m + 1):
                if m % r:
                    continue
                assert sum(coset_profile(A, r, m).counts) == len(A)

    @pytest.mark.parametrize("m", range(1, 13))
    def test_reconstruction_exhaustive_small(self, m):
        for mask in range(1 << m):
            A = {i for i in range(m) if mask >> i & 1}
            fv = dft_of_set(A, m).values
            for r in range(1, m + 1):
                if m % r:
                    continue
                recon = profile_reconstruction(coset_profile(A, r, m), m)
                assert abs(recon - fv[(m // r) % m]) < TOL


class TestLemmas:
    def test_fourier_lemma_k4x2(self):
        spec = validate_spec(2, {1, 3}, {0, 1, 2, 3})
        g = build_graph(spec)
        arr = is_distance_regular(g, True)
        dp = distance_partition(spec, g)
        assert (arr.k, arr.lam, arr.mu) == (6, 4, 6)
        assert fourier.check_fourier_lemma(spec, dp, arr)

    def test_fourier_lemma_c4(self):
        spec = validate_spec(1, set(), {0, 1})
        g = build_graph(spec)
        arr = is_distance_regular(g, True)
        dp = distance_partition(spec, g)
        assert (arr.k, arr.lam, arr.mu) == (2, 0, 2)
        assert fourier.check_fourier_lemma(spec, dp, arr)

    def test_orbit_transversal_preconditions(self):
        with pytest.raises(PreconditionViolatedError):
            fourier.check_orbit_transversal_lemma({0, 2, 4}, 3, 6)
        with pytest.raises(PreconditionViolatedError):
            fourier.check_orbit_transversal_lemma({0, 1, 2}, 2, 6)
        with pytest.raises(PreconditionViolatedError):
            fourier.check_orbit_transversal_lemma({0, 1, 3}, 2, 4)
        with pytest.raises(PreconditionViolatedError):
            fourier.check_orbit_transversal_lemma({0, 1}, 4, 8)

    @pytest.mark.parametrize("m", range(2, 25))
    def test_orbit_transversal_exhaustive(self, m):
        # every orbit-closed transversal of (m/p)Z_m satisfies the lemma
        primes = [p for p in range(2, m + 1) if m % p == 0
                  and all(p % q for q in range(2, p))]
        orbits = [members for _, members in unit_orbits(m).orbits]
        for p in primes:
            for mask in range(1 << len(orbits)):
                chosen = [orb for b, orb in enumerate(orbits) if mask >> b & 1]
                A = set().union(*chosen) if chosen else set()
                if len(A) != m // p or not is_transversal(A, m // p, m):
                    continue
                assert fourier.check_orbit_transversal_lemma(A, p, m)
