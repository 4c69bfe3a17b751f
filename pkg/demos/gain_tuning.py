"""
Gain sweep plus the local stability certificate.

First part sweeps k_p over the stock grid and reports the error at
t = 50 s: more proportional gain buys a faster transient until the
coarse step starts to bite.  Second part builds the linearised system
at the equilibrium and prints its eigenvalues together with the
quadratic-certificate matrix, so the sweep has a theory to lean on.
"""

import numpy as np

from so3obs import (
    Gains,
    ScenarioConfig,
    build_certificate,
    linearized_matrices,
    run_experiment,
)


def sweep():
    cfg = ScenarioConfig(scenario="gain_sweep", dt=0.5, T=100.0, seed=0,
                         sweep={"param": "k_p", "values": [0.1, 0.5, 1.0]})
    records = run_experiment(cfg)
    print("k_p sweep (k_I = 0.3, k_e = 1, dt = 0.5)")
    for rec in records:
        t = rec.column("t")
        err = rec.column("frobenius_error")
        at50 = err[np.searchsorted(t, 50.0)]
        print("  %-10s error at t=50: %.3e   terminal: %.3e"
              % (rec.label, at50, err[-1]))
    print()


def local_picture():
    g = Gains()
    A, _ = linearized_matrices(np.zeros(3), g)
    eig = np.linalg.eigvals(A)
    print("linearisation at the equilibrium, omega = 0")
    print("  eigenvalues:")
    for lam in sorted(eig, key=lambda z: (z.real, z.imag)):
        print("    %+.4f %+.4fj" % (lam.real, lam.imag))
    print("  max real part: %+.4f" % eig.real.max())
    print("  defect contraction rate: %.1f (= 2 k_e)" % (2.0 * g.k_e))

    cert = build_certificate(g, Omega_max=np.sqrt(3.0), alpha2=1.0)
    print("  certificate  alpha = (%.3f, %.3f, %.3f)"
          % (cert.alpha1, cert.alpha2, cert.alpha3))
    print("  Q = [[%.3f, %.3f], [%.3f, %.3f]]   min eig %.4f"
          % (cert.Q[0, 0], cert.Q[0, 1], cert.Q[1, 0], cert.Q[1, 1],
             np.linalg.eigvalsh((cert.Q + cert.Q.T) / 2.0).min()))


def main():
    sweep()
    local_picture()


if __name__ == "__main__":
    main()
