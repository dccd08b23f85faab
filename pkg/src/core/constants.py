"""
Core constants and limits.

Defines tolerances, resource caps and calibrated constants shared by every
verification suite. Desk-scale limits keep brute-force sums and exact
coefficient tables within memory and runtime budgets.
"""

# Modular Arithmetic Limits
MAX_MODULUS = 2**40  # Largest modulus accepted by exact residue arithmetic
MAX_CHARACTER_MODULUS = 10**6  # Largest modulus with a precomputed value table

# Coefficient Caches
MAX_COEFFICIENTS = 10**6  # Largest N for exact tau(n) tables
EISENSTEIN_MAX_COEFFICIENTS = 5000  # Largest N for Delta * E_{k-12} forms (quadratic convolution)
DEFAULT_COEFFICIENT_BOUND = 10**4  # Default cache size of a CuspForm
COEFFICIENT_PRIME_CEILING = 2**31  # Residue primes are taken just below this
SUPPORTED_WEIGHTS = (12, 16, 18, 20, 22, 26)  # One-dimensional level-1 cusp form spaces

# Comparison Tolerances
RELATIVE_ERROR_FLOOR = 1e-30  # Denominator floor in relative error
IDENTITY_TOLERANCE = 1e-9  # Default relative tolerance for exact identities
CHARSUM_TOLERANCE = 1e-6  # |brute force - closed form| for character sums
CHARSUM_EXACT_TOLERANCE = 1e-8  # Closed-form check for the first Poisson sum
ROUNDING_PER_TERM = 1e-10  # Accumulated floating error allowance per unit-modulus term
ROOT_OF_UNITY_SNAP = 1e-6  # Distance at which a unit is snapped to a fourth root of unity

# Delta Symbol
DELTA_TOLERANCE = 1e-8  # |delta_expand(n) - [n = 0]|

# Poisson Summation
POISSON_TERM_CUTOFF = 1e-16  # Terms below this are dropped from truncated sums
POISSON_TAIL_TOLERANCE = 1e-12  # Allowed mass beyond the truncation radius
POISSON_MAX_RADIUS = 1 << 14  # Give up (NonConvergent) beyond this truncation radius
POISSON_GAUSSIAN_TOLERANCE = 1e-10  # Gaussian family acceptance
POISSON_WINDOW_TOLERANCE = 1e-8  # Bump window acceptance
POISSON_WINDOW_SCALE = 3.0  # Bump test function dilation
POISSON_WINDOW_SHIFT = -2.2  # Bump test function translation, support [0.8, 3.8]
WINDOW_FOURIER_TOLERANCE = 1e-13  # Panel-doubling agreement of the window transform, relative to its L1 scale

# Oscillatory Quadrature
NODES_PER_PANEL = 20  # Gauss-Legendre nodes on every panel (one oscillation at most)
MIN_PANELS = 8  # Panels used even for non-oscillating integrands
PHASE_SAMPLES = 2049  # Initial sampling of the phase for cycle counting
MAX_PHASE_SAMPLES = 1 << 22  # Cap on phase resampling
MAX_SAMPLE_STEP_CYCLES = 0.25  # Resample while the phase moves more than this between samples
QUADRATURE_TOLERANCE = 1e-9  # Relative to (b - a) * max|g|
MAX_REFINEMENTS = 8  # Panel doublings before QuadratureFailure

# Bessel Transform and Voronoi Summation
BESSEL_QUADRATURE_TOLERANCE = 1e-8  # Relative to the integral scale
BESSEL_CHUNK = 512  # Dual-sum arguments evaluated per block
BESSEL_CHECK_STRIDE = 97  # Every k-th argument is re-evaluated at double resolution
VORONOI_TRUNCATION_CONSTANT = 100.0  # T = 100 q^2 / X + 50 q^2
VORONOI_TRUNCATION_QUADRATIC = 50.0
VORONOI_TOLERANCE = 1e-6  # Acceptance on rel_err
VORONOI_DOUBLING_TOLERANCE = 1e-8  # Allowed RHS movement when T doubles, relative to |LHS|
DECAY_WINDOW_SHARPNESS = 6.0  # Bump sharpness used where fast Fourier decay is needed

# Stationary Phase and Nonstationary Decay
STATIONARY_SAMPLES = 4097  # Grid used to locate sign changes of f'
NONSTATIONARY_OCTAVE_SAMPLES = 16  # Phase scales sampled per octave [B, 2B]
NONSTATIONARY_OCTAVES = 4  # B, 2B, 4B, 8B
DECAY_SLACK = 0.05  # Allowed excess over the 2^-j decay ratio
DECAY_NOISE_FLOOR = 1e-13  # Envelopes below this (relative) count as resolved zeros
STATIONARY_DECAY_RATIO = 2.5  # Relative discrepancy shrinks at least this much per decade of T

# Voronoi Kernel Integral
J_BOUND_CONSTANT = 20.0  # C in |J| <= C p^l q / sqrt(nN)
J_NEGLIGIBLE_RATIO = 1e-6  # |J| / peak beyond the effective range

# Character Sum Bounds
CHARSUM_BOUND_CONSTANT = 4.0  # C in |A| <= C p^(l/2), |B| <= C sqrt(P1)
WEIL_MAX_PRIME = 10**4  # Brute-force Weil sums only
CHARSUM_GRID_BOUND = 2000  # p^r q bound of the exhaustive first-Poisson grid
DECOMPOSITION_MAX_TERMS = 10**9  # N p^l Q^2 term evaluations
DECOMPOSITION_TOLERANCE = 1e-6  # Direct S(N) against its circle-method representation

# Rankin-Selberg
RANKIN_SELBERG_EXPONENT = 1.01
RANKIN_SELBERG_CALIBRATION_X = 1000

# Approximate Functional Equation
AFE_CONTOUR_SHIFT = 3.0  # Re u of the right contour
AFE_LEFT_SHIFT_MAX = 3.0  # Largest |Re u| of the left contour
AFE_CONTOUR_HEIGHT = 60.0  # |Im u| truncation
AFE_CONTOUR_STEP = 0.05  # Trapezoid step
AFE_V_TOLERANCE = 1e-8  # Agreement of V with its step-doubled subgrid
AFE_TABLE_Y_MIN = 1e-4  # V is tabulated in log Y over [Y_MIN, Y_MAX], Y = 2 pi y / P
AFE_TABLE_Y_MAX = 1e7
AFE_TABLE_LOG_STEP = 0.002  # Spline knot spacing in log Y
AFE_TABLE_CHUNK = 512  # Table rows evaluated per block
AFE_TRUNCATION_CONSTANT = 30.0  # 30 sqrt(P) (k / 2 pi) log(P + 10)
AFE_TAIL_TOLERANCE = 1e-10  # |V| beyond the truncation point
AFE_RESIDUAL_TOLERANCE = 1e-6
AFE_AGREEMENT_TOLERANCE = 1e-5  # X and G choices agree to this relative error
AFE_REALITY_TOLERANCE = 1e-8
AFE_RESIDUAL_FLOOR = 1e-2  # Fraction of |A| + |B| used when L(1/2) vanishes
ROOT_NUMBER_TOLERANCE = 1e-6  # ||epsilon| - 1|
CENTRAL_VALUE_NOISE_FLOOR = 1e-8  # |L| below this is reported as a vanishing value
CONVEXITY_EXPONENT = 0.51  # |L| <= C P^(1/2 + 0.01)

# Reproducibility
DEFAULT_SEED = 0x5EED

# Command Line
DEFAULT_OUTPUT_DIR = "reports"
CSV_FLOAT_FORMAT = "%.17g"  # Round-trip precision for doubles
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG_ERROR = 2
