"""Exception types and parameter checks shared across the package."""


class InvalidParametersError(ValueError):
    """A locus or degree parameter combination is out of range."""


class DomainViolationError(ValueError):
    """An input lies outside the set a map is defined on."""


class ShapeMismatchError(ValueError):
    """Two objects that must agree in shape or size do not."""


class NotInImageError(ValueError):
    """A tableau is not in the image of the symmetric correspondence."""


class InvalidMatrixError(ValueError):
    """A matrix is not symmetric 0/1 with zero diagonal."""


class ResourceLimitError(RuntimeError):
    """A brute-force computation exceeds the configured size cap."""


def check_locus_params(n, a):
    """Require n > 0, 0 <= a <= n, and a = n (mod 2)."""
    if not isinstance(n, int) or not isinstance(a, int):
        raise InvalidParametersError(f"n and a must be integers, got n={n!r}, a={a!r}")
    if n <= 0 or a < 0 or a > n or (n - a) % 2 != 0:
        raise InvalidParametersError(
            f"need n > 0, 0 <= a <= n and a = n (mod 2), got n={n}, a={a}"
        )


def check_degree_params(n, a, d):
    """Require valid (n, a) and 0 <= d <= (n - a) / 2."""
    check_locus_params(n, a)
    if not isinstance(d, int) or d < 0 or 2 * d > n - a:
        raise InvalidParametersError(f"degree d={d!r} out of range for n={n}, a={a}")
