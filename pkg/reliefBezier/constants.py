# Numeric defaults shared by the library and the CLI.

# HPoint3 up-to-scale comparison
HPOINT_RTOL = 1e-9

# |det| > DET_RTOL * ||M||_F**4
DET_RTOL = 1e-12

# singular-plane detection, scaled by max(1, |z|, k)
PLANE_ATOL = 1e-14

# weights equal up to this relative spread count as nonrational
NONRATIONAL_RTOL = 1e-12

# detect_span root agreement
SPAN_TOL = 1e-9

# Bezier clipping
TOL_PARAM = 1e-10
TOL_POINT2D_REL = 1e-9
TOL_POINT3D_REL = 1e-8
MAX_DEPTH = 60
MIN_REDUCTION = 0.2
CLIP_SLACK = 1e-9
# fat-line band widening, relative to the coordinate scale
BAND_EPS = 1e-14
# converged boxes whose tangents cross at a smaller sine are tangencies
TANGENT_SINE = 1e-6
MERGE_FACTOR = 10.0
POLISH_NFEV = 50

# sampling oracle
ORACLE_GRID = 128
ORACLE_TOL_PARAM = 1e-10

# SVG output
SVG_WIDTH = 800
SVG_HEIGHT = 600
SVG_MARGIN = 0.05
SVG_SAMPLES = 256
