"""Verification toolkit for the singular octonionic Hopf foliation on O^2.

Subpackages, bottom up:

  polyring    exact sparse rational polynomials (the symbolic proof backend)
  algebra     Cayley-Dickson tower and its identity suites
  leaves      octonionic lines, the singular Hopf leaf decomposition, sampling
  groupoid    the rescaling groupoid on O^2, its structure maps and G2 action
  algebroid   anchor and bracket of the induced Lie algebroid
  lie3        graded resolution (Lie 3-algebroid), differentials and brackets
  foliation   tangency characterization, linear-field nullspaces, metric checks
  cli         verification suites and CSV export from the command line
"""

from .report import Check, VerificationReport, ARTIFACT_VERSION

__version__ = ARTIFACT_VERSION

__all__ = ["Check", "VerificationReport", "ARTIFACT_VERSION", "__version__"]
