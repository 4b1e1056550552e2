"""Exact cohomology, Chern data and global generation for sheaves on P^3."""

from ._sheaflab import (
    CohomologyError,
    Complex,
    Field,
    FiberJump,
    FormatError,
    GenericityFailure,
    LiftFailed,
    SpectrumError,
    build,
    catalog_ids,
    chern,
    chi,
    cohomology,
    globally_generated,
    liaison_example,
    parity_ok,
    recover_spectrum,
    run_cli,
    spectrum,
    spectrum_tables,
    validate,
    verify,
)

__all__ = [
    "CohomologyError",
    "Complex",
    "Field",
    "FiberJump",
    "FormatError",
    "GenericityFailure",
    "LiftFailed",
    "SpectrumError",
    "build",
    "catalog_ids",
    "chern",
    "chi",
    "cohomology",
    "globally_generated",
    "liaison_example",
    "parity_ok",
    "recover_spectrum",
    "run_cli",
    "spectrum",
    "spectrum_tables",
    "validate",
    "verify",
]
