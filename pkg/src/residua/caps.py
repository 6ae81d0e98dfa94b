"""Size caps.  All checks in this library are desk-scale by design; the caps
keep accidental blowups from turning an exhaustive check into a stalled one.
"""

# Largest ring a constructor will materialize as dense tables.
MAX_CONSTRUCTION_ORDER = 4096

# Largest ring admitted to ideal/subfield/homomorphism enumeration.
MAX_ENUMERATION_ORDER = 256

# Largest ring admitted to the exhaustive verification suites.
MAX_SUITE_ORDER = 64

# Default bounds for the CLI.
DEFAULT_VERIFY_ORDER = 64
DEFAULT_SEARCH_ORDER = 81
