"""Empirical Orlicz boundedness of the sign multiplier and a pseudo-differential
operator, and the refusal for a non-strict Young function.

    python3 demos/boundedness.py
"""

from orlicz import ExperimentSpec, NotStrictError, run_boundedness


def show(label: str, spec: dict) -> None:
    try:
        rep = run_boundedness(ExperimentSpec.from_dict(spec))
    except NotStrictError as exc:
        print(f"{label}: refused ({exc})")
        return
    print(f"{label}: bounded = {rep.bounded}")
    for key, t in rep.trend.items():
        print(f"  {key:<12} sup at n {t['sup_n']:.6f}  at 2n {t['sup_2n']:.6f}  slope {t['slope']:.2e}")


def main() -> None:
    show("sgn(D), counterexample", {"operator": "multiplier", "symbol": {"name": "sgn"},
                                    "phi": "counterexample"})
    show("(1 + sin(x)/2) xi/<xi>, counterexample",
         {"operator": "psdo-kn", "symbol": {"name": "modulated-riesz"}, "phi": "counterexample"})
    show("translation FIO, orders -0.01",
         {"operator": "fio", "symbol": {"name": "identity"}, "phi": "counterexample",
          "phase": {"name": "translation-phase", "c": 0.5}, "cutoff": 0.5,
          "orders": [-0.01, -0.01], "family": {"kinds": ["gaussian", "random-trig"]}})
    show("sgn(D), entropy", {"operator": "multiplier", "symbol": {"name": "sgn"},
                             "phi": "entropy"})


if __name__ == "__main__":
    main()
