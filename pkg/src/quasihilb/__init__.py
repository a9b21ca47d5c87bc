"""Hilbert quasipolynomials of rational generating functions and their roots."""

from .errors import (
    EmptyClass,
    ExponentOutOfRange,
    InvalidGenFun,
    IrrationalCoefficients,
    NotEnoughSamples,
    ParseError,
    QuasiHilbError,
    RootAtOneForbidden,
    RootFindingDiverged,
    TheoremViolation,
    ZeroDivisor,
    ZeroNumerator,
)
from .exactalg import (
    RatPoly,
    SturmChain,
    count_real_roots,
    poly_add,
    poly_divrem,
    poly_mul,
    poly_shift,
    sturm_chain,
)
from .genfun import (
    GenFun,
    NumeratorSplit,
    SeriesPrefix,
    interpolate_constituents,
    series_prefix,
    split_numerator,
)
from .quasipoly import (
    FactoredConstituent,
    ProductPoly,
    QuasiPoly,
    constituent_single_power,
    constituents_closed_form,
    factor_constituent,
    product_poly,
    trivial_factor,
)
from .rootcert import (
    ComplexRoot,
    RootCertificate,
    RootOfUnity,
    UnitCircleReport,
    certify_critical_line_exact,
    certify_critical_line_numeric,
    check_unit_circle,
    find_roots,
    generate_unit_circle_family,
    verify_theorem_suite,
)

__version__ = "0.1.0"
