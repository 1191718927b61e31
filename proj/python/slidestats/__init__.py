"""Slide statistics rho1 and rho2 of point sets."""

from ._core import (
    SlideError,
    compute,
    dimension_from_rho2,
    estimate,
    genial_entropy_complement_ecdf,
    genial_entropy_quadrature,
    genial_entropy_step,
    log_returns,
    log_slide_reference,
    nn_distances,
    nn_distances_1d,
    normality_test,
    replicate,
    rho1,
    rho1_fd,
    rho2,
    rho2_fd,
    rho_curve,
    sample,
    slide_function,
    tangible_target,
    zeta,
)

__all__ = [
    "SlideError",
    "compute",
    "dimension_from_rho2",
    "estimate",
    "genial_entropy_complement_ecdf",
    "genial_entropy_quadrature",
    "genial_entropy_step",
    "log_returns",
    "log_slide_reference",
    "nn_distances",
    "nn_distances_1d",
    "normality_test",
    "replicate",
    "rho1",
    "rho1_fd",
    "rho2",
    "rho2_fd",
    "rho_curve",
    "sample",
    "slide_function",
    "tangible_target",
    "zeta",
]
