"""Lebesgue exponents, Delta2/Lambda verdicts and norms for the built-in
Young functions.

    python3 demos/young_functions.py
"""

import numpy as np

from orlicz import (GridFunction, check_delta2, check_lambda, compute_exponents, luxemburg_norm,
                    make_builtin, weak_orlicz_norm)
from orlicz.bench import lambda_probe_exponent, library


def main() -> None:
    print(f"{'function':<16}{'q_phi':>10}{'p_phi':>12}{'Delta2':>8}{'Lambda':>8}")
    for name, phi in library().items():
        r = compute_exponents(phi)
        lam = check_lambda(phi, p=lambda_probe_exponent(r.q_phi)).satisfied
        print(f"{name:<16}{r.q_phi:>10.5f}{r.p_phi:>12.5g}{str(check_delta2(phi).satisfied):>8}"
              f"{str(lam):>8}")

    f = GridFunction.sample(lambda x: np.exp(-x[..., 0] ** 2 / 2), 1, 8.0, 256)
    print("\nnorms of exp(-x^2/2) on [-8, 8), n = 256")
    for name in ("power(2)", "counterexample", "entropy"):
        phi = library()[name] if name in library() else make_builtin(name)
        lux, weak = luxemburg_norm(f, phi), weak_orlicz_norm(f, phi)
        print(f"  {name:<16} Luxemburg {lux.value:.10f}  weak {weak.value:.10f}  "
              f"modular at norm {lux.modular_at_value:.12f}")


if __name__ == "__main__":
    main()
