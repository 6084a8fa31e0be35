# --- Documents ---
FORMAT_VERSION = "1"
CONE_FIELDS = ("format_version", "dim", "name", "rays", "lineality", "inequalities", "equations")
POLYTOPE_FIELDS = ("format_version", "dim", "name", "vertices", "symmetric")

# --- Exit codes ---
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DD_LIMIT = 3

# --- Verification suites ---
SUITE_NAMES = (
    "thmA",
    "thmB",
    "thmC",
    "thmD_faces",
    "thmE_ideals",
    "thmF_rays",
    "rank1",
    "bodies",
    "appendix",
    "oracle-crosscheck",
    "mapping",
)
SUITE_ALL = "all"
# Accepted spellings for suite names
SUITE_ALIASES = {"thmD": "thmD_faces", "thmE": "thmE_ideals", "thmF": "thmF_rays", "oracle": "oracle-crosscheck"}

# Cones of the properness and lineality grids (8 x 8 pairs)
GRID_CONES = ("std1", "std2", "Q", "Qstar", "halfplane", "zero2", "full2", "space0")

# Sample sizes of the randomized checks
ORACLE_MEMBERSHIP_SAMPLES = 500
FACE_CANDIDATE_SAMPLES = 200
QUOTIENT_SAMPLES = 50

# --- Reports ---
REPORT_FORMATS = ("text", "json", "xlsx")
EXCEL_HEADERS = {
    "A1": "Nº",
    "B1": "Suite",
    "C1": "Check",
    "D1": "Result",
    "E1": "Detail",
    "F1": "Witness",
}
COLUMN_WIDTHS = {"A": 6, "B": 20, "C": 60, "D": 10, "E": 60, "F": 40}
SUMMARY_SHEET = "Summary"
CHECKS_SHEET = "Checks"


class ReportMessages:
    PASS = "PASS"
    FAIL = "FAIL"
    ALL_PASSED = "All checks passed."
    SOME_FAILED = "Some checks failed."
    CANCELLED = "Run cancelled."
