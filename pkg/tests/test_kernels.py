import json
import os
import subprocess
import sys

from schurpos import _kernels
from schurpos.lr import product_terms, skew_schur_expand
from schurpos.partitions import parse_skew

SNIPPET = """
import json
from schurpos import _kernels
from schurpos.lr import product_terms, skew_schur_expand
from schurpos.partitions import parse_skew
cases = [((3, 2, 1), (2, 1)), ((4, 2), (3, 3, 1)), ((2, 2, 1, 1), (3, 1))]
out = {"numba": _kernels.USE_NUMBA, "products": [], "skews": []}
for a, b in cases:
    out["products"].append(sorted((list(k), v) for k, v in product_terms(a, b).items()))
for s in ("5,4,2,1/2,1", "4,4,2,1/2,1", "3,3,3/2,1"):
    out["skews"].append(sorted((list(k), v) for k, v in skew_schur_expand(parse_skew(s)).items()))
print(json.dumps(out))
"""


def _run(disable: bool) -> dict:
    env = dict(os.environ)
    env.pop("SCHURPOS_DISABLE_NUMBA", None)
    if disable:
        env["SCHURPOS_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", SNIPPET], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_fallback_matches_compiled_kernel():
    compiled, plain = _run(False), _run(True)
    assert plain["numba"] is False
    assert compiled["products"] == plain["products"]
    assert compiled["skews"] == plain["skews"]


def test_record_buffer_grows_past_initial_capacity():
    # more than 4096 LR tableaux, so the driver must retry with a bigger buffer
    mu, nu = (6, 4, 3, 2, 1), (4, 3, 2, 1)
    n, recs = _kernels.run_lr(mu + (0,) * 4, (0,) * 9, nu, 9, 4, False, True)
    assert n > 4096 and recs.shape == (n, 9)
    terms = product_terms(mu, nu)
    assert sum(terms.values()) == n


def test_skew_expansion_counts_records():
    v = skew_schur_expand(parse_skew("6,5,4,3,2,1/3,2,1"))
    assert all(p.size == 15 for p in v)
