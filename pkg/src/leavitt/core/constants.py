"""Static values used across leavitt."""

# Scalar field used when no --field is given
DEFAULT_FIELD = "q"

# Enumeration guard for admissible pairs
DEFAULT_ADMISSIBLE_VERTEX_LIMIT = 16

# Membership oracle
DEFAULT_VERIFY_BOUND = 6
DEFAULT_MEMBER_BOUND = 4

# Prime fields must fit a machine word
MAX_PRIME = 2**31

# Identifiers: letters, digits, underscores, then optional primes
IDENTIFIER_PATTERN = r"[A-Za-z_][A-Za-z0-9_]*'*"


class VertexKind:
    SINK = "sink"
    REGULAR = "regular"
    INFINITE_EMITTER = "infinite-emitter"


class TraceAction:
    VERTEX_ADDED = "vertex-added"
    BREAKING_ADDED = "breaking-added"
    GCD_MERGE = "gcd-merge"
    GENERATOR_DROPPED = "generator-dropped"


class DerivationRule:
    SEED = "seed"
    HEREDITARY = "hereditary"
    SATURATED = "saturated"


class WitnessMethod:
    ALGEBRAIC = "algebraic"
    ORACLE = "oracle"


class VerificationStatus:
    VERIFIED = "verified"
    UNVERIFIED = "unverified"


class GeneratorKind:
    VERTEX = "vertex"
    BREAKING = "breaking"
    CYCLE = "cycle"


class MembershipStatus:
    MEMBER = "member"
    INCONCLUSIVE = "inconclusive"
