"""Apply each operator family to a Gaussian and compare with a reference.

    python3 demos/operators.py
"""

import numpy as np

from orlicz import (GridFunction, SampledSymbol, SymbolDescriptor, apply_fio, apply_multiplier,
                    apply_psdo_general, apply_psdo_kn, catalog_phase, catalog_symbol,
                    lp_norm, transfer_quantization, validate_phase)


def main() -> None:
    f = GridFunction.sample(lambda x: np.exp(-2 * x[..., 0] ** 2), 1, 8.0, 256)
    x = f.axis()

    # x i xi quantized with A = 0 and A = 1/2: x f' and x f' + f / 2
    a = SymbolDescriptor(lambda x, xi: x[..., 0] * 1j * xi[..., 0], 1, name="x-i-xi")
    df = -4 * x * f.values
    kn = apply_psdo_kn(a, f).values
    weyl = apply_psdo_general(a, 0.5, f).values
    core = np.abs(x) <= 4
    print(f"Kohn-Nirenberg x i xi vs x f'        : {np.max(np.abs(kn - x * df)):.2e}")
    print(f"Weyl x i xi vs x f' + f/2 (|x| <= 4)  : "
          f"{np.max(np.abs(weyl - x * df - f.values / 2)[core]):.2e}")

    # Hilbert transform and a unimodular multiplier on a mean-free input
    h = apply_multiplier(catalog_symbol("hilbert"), f)
    print(f"Hilbert transform: max |Hf| = {np.max(np.abs(h.values)):.6f}")
    odd = f.with_values(x * f.values)
    u = apply_multiplier(catalog_symbol("unimodular-power", gamma=1.0), odd)
    print(f"|xi|^i changes the L2 norm of x f by  : {abs(lp_norm(u, 2) - lp_norm(odd, 2)):.2e}")

    # quantization transfer of a windowed x xi symbol from A = 0 to A = 1/2
    w = SymbolDescriptor(lambda x, xi: x[..., 0] * xi[..., 0]
                         * np.exp(-(x[..., 0] ** 2 + xi[..., 0] ** 2) / 18), 1, name="window")
    s1 = SampledSymbol.for_grid(w, f, 24.0, 256)
    s2 = transfer_quantization(s1, 0.0, 0.5)
    gap = np.max(np.abs(apply_psdo_general(w, 0.0, f).values
                        - apply_psdo_general(s2.as_symbol(), 0.5, f).values))
    print(f"Op_0(a1) vs Op_1/2(a2) after transfer : {gap:.2e}")

    # FIO with phase x xi + c |xi|: positive frequencies move left by c, negative right
    eps, shift = 0.3, 16
    c = shift * f.spacing
    phase = catalog_phase("translation-phase", c=c)
    report = validate_phase(phase)
    g = apply_fio(catalog_symbol("identity").with_cutoff(eps), phase, f, report)
    pos = SymbolDescriptor(lambda x, xi: (xi[..., 0] >= eps) * 1.0, 1, True)
    neg = SymbolDescriptor(lambda x, xi: (xi[..., 0] <= -eps) * 1.0, 1, True)
    moved = (np.roll(apply_multiplier(pos, f).values, -shift)
             + np.roll(apply_multiplier(neg, f).values, shift))
    print(f"translation FIO (phase valid: {report.valid}) vs shifted bands: "
          f"{np.max(np.abs(g.values - moved)):.2e}")

    b = catalog_symbol("sgn").with_cutoff(eps)
    flat = apply_fio(b, catalog_phase("flat-phase"), f).values
    print(f"flat-phase FIO vs multiplier          : "
          f"{np.max(np.abs(flat - apply_multiplier(b, f).values)):.2e}")


if __name__ == "__main__":
    main()
