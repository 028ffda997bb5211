"""Calibrating the Mills-Robbins-Rumsey product against determinants.

The literal product form disagrees with det C(mu+i+j, 2j-i).  The probe
searches for a constant factor and an argument map that repair it, and the
verifier reports I05 as a calibration finding instead of a failure.

Run:  python3 demos/04_mrr_calibration.py
"""
from detlab import build, calibrate_mrr, det_bareiss
from detlab.closed_forms import mrr_calibrated, mrr_literal

verdict = calibrate_mrr(4, 4)
print(verdict)

print("\n n  mu   det        literal     calibrated")
for n in range(1, 6):
    for mu in (0, 1, 2):
        d = det_bareiss(build("I05", n, {"mu": mu}))
        print(f"{n:2d} {mu:3d}   {d:<10} {str(mrr_literal(mu, n)):<11} {mrr_calibrated(mu, n)}")
