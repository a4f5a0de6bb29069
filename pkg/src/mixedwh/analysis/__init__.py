"""Identities, probes, witnesses and non-degeneracy reports."""

from .identities import (
    EulerCheck,
    OkaResidual,
    euler_polar,
    euler_radial,
    oka_residual,
    polar_action_check,
    radial_action_check,
)
from .probes import ProbeResult, critical_probe, zero_probe
from .witnesses import holomorphic_zero_witness, reach_target
from .certificates import Certificate
from .nondegeneracy import (
    FaceReport,
    ProbeSettings,
    TrueNondegeneracy,
    nondegeneracy_report,
    true_nondegeneracy_check,
)
