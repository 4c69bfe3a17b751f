"""
Sinusoidal disturbance on the measurements, two frequencies.

The default disturbance is 159 Hz sampled at 2 Hz.  The phase advances
by 2 pi * 159 * 0.5 = 159 pi per sample, an exact integer multiple of
pi, so sin() of it is zero to rounding and the run is indistinguishable
from the clean one.  Pick an incommensurate frequency instead and the
observer has to average the disturbance out, settling to a small but
visibly nonzero residual.
"""

import numpy as np

from so3obs import NoiseSpec, ScenarioConfig, run_experiment


def run_with(freq_hz, label):
    cfg = ScenarioConfig(
        scenario="noise",
        dt=0.5,
        T=100.0,
        seed=0,
        noise=NoiseSpec(amplitude=0.1, frequency_hz=freq_hz),
    )
    rec = run_experiment(cfg)[0]
    err = rec.column("frobenius_error")
    tail = err[len(err) * 4 // 5:]
    print("  %-24s mean tail error %.3e   max tail %.3e"
          % (label, tail.mean(), tail.max()))
    return err


def main():
    print("disturbance amplitude 0.1 rad, dt = 0.5 s")
    run_with(159.0, "159 Hz (aliases away)")
    run_with(1000.0 / (2.0 * np.pi), "1000/(2 pi) Hz")
    run_with(0.1, "0.1 Hz (slow wobble)")
    print()
    print("sampling a fast sinusoid at 2 Hz keeps only its value at the grid")
    print("points; whether that value is near zero is pure number theory, so")
    print("always check the sampled sequence before trusting a 'noisy' run.")


if __name__ == "__main__":
    main()
