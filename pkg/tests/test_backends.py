import os
import subprocess
import sys

import numpy as np
import pytest

from cfkit import DistanceParams, cf_c, cf_h, cf_im, legacy_minkowski, score
from cfkit import backends
from cfkit.distance import component_rows, order_code

from helpers import random_cfns, random_component_rows

HAS_NUMBA = "numba" in backends.available_backends()

P_CODES = [0, 1, 2, 3, 7, 10, 64]


@pytest.mark.skipif(not HAS_NUMBA, reason="numba not installed")
class TestBackendAgreement:
    def setup_method(self):
        rng = np.random.default_rng(11)
        self.a = random_component_rows(rng, 4000)
        self.b = random_component_rows(rng, 4000)
        self.nb = backends.bound_kernels("numba")
        self.np_ = backends.bound_kernels("numpy")

    @pytest.mark.parametrize("p", P_CODES)
    def test_cfim_bitwise(self, p):
        assert np.array_equal(
            self.nb.cfim_pairwise(self.a, self.b, p),
            self.np_.cfim_pairwise(self.a, self.b, p),
        )

    @pytest.mark.parametrize("p", P_CODES)
    def test_legacy_bitwise(self, p):
        assert np.array_equal(
            self.nb.legacy_pairwise(self.a, self.b, p),
            self.np_.legacy_pairwise(self.a, self.b, p),
        )

    def test_cfh_bitwise(self):
        assert np.array_equal(
            self.nb.cfh_pairwise(self.a, self.b), self.np_.cfh_pairwise(self.a, self.b)
        )

    @pytest.mark.parametrize("p", P_CODES)
    @pytest.mark.parametrize("lam", [0.0, 0.3, 0.5, 1.0])
    def test_score_bitwise(self, p, lam):
        assert np.array_equal(
            self.nb.score_many(self.a, p, lam), self.np_.score_many(self.a, p, lam)
        )


class TestScalarMatchesBatch:
    def test_distances(self):
        rng = np.random.default_rng(12)
        fs = random_cfns(rng, 200)
        gs = random_cfns(rng, 200)
        a = component_rows(fs)
        b = component_rows(gs)
        for p in (1, 2, 3, 10):
            batch = backends.cfim_pairwise(a, b, order_code(p))
            legacy = backends.legacy_pairwise(a, b, order_code(p))
            for i, (f, g) in enumerate(zip(fs, gs)):
                assert cf_im(f, g, p) == batch[i]
                assert legacy_minkowski(f, g, p) == legacy[i]
        hausdorff = backends.cfh_pairwise(a, b)
        for i, (f, g) in enumerate(zip(fs, gs)):
            assert cf_h(f, g) == hausdorff[i]

    def test_score(self):
        rng = np.random.default_rng(13)
        fs = random_cfns(rng, 200)
        rows = component_rows(fs)
        for p in (1, 2, 3):
            for lam in (0.0, 0.4, 1.0):
                batch = backends.score_many(rows, order_code(p), lam)
                params = DistanceParams(p=p, lam=lam)
                for i, f in enumerate(fs):
                    assert score(f, params).s == batch[i]

    def test_cfc_matches_score_composition(self):
        # cf_c through the scalar path combines exactly like the score kernel
        rng = np.random.default_rng(14)
        fs = random_cfns(rng, 50)
        params = DistanceParams(p=3, lam=0.35)
        for f in fs:
            expected = params.lam * cf_im(f, fs[0], 3) + (1.0 - params.lam) * cf_h(f, fs[0])
            assert cf_c(f, fs[0], params) == expected


class TestSelection:
    def test_available_includes_numpy(self):
        assert "numpy" in backends.available_backends()

    def test_bound_kernels_rejects_unknown(self):
        with pytest.raises(ValueError):
            backends.bound_kernels("cython")

    def test_rows_shape_check(self):
        with pytest.raises(ValueError):
            backends.cfh_pairwise(np.zeros((3, 2)), np.zeros((3, 2)))

    @pytest.mark.parametrize("flag,expected", [("numpy", "numpy"), ("auto", None)])
    def test_env_flag(self, flag, expected):
        env = dict(os.environ, CFKIT_BACKEND=flag)
        out = subprocess.run(
            [sys.executable, "-c", "import cfkit.backends as b; print(b.backend_name())"],
            env=env,
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0
        if expected is not None:
            assert out.stdout.strip() == expected
        else:
            assert out.stdout.strip() in ("numba", "numpy")

    def test_env_flag_rejects_unknown(self):
        env = dict(os.environ, CFKIT_BACKEND="fortran")
        out = subprocess.run(
            [sys.executable, "-c", "import cfkit.backends"],
            env=env,
            capture_output=True,
            text=True,
        )
        assert out.returncode != 0
        assert "CFKIT_BACKEND" in out.stderr
