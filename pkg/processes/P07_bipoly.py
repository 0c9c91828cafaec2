# Import Libraries that are required to adjust sys path
import sys                      # Provides access to system-specific parameters and functions
from pathlib import Path        # Offers an object-oriented interface for filesystem paths

# Adjust sys.path so we can import modules from the parent folder
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
sys.dont_write_bytecode = True  # Prevents _pycache_ creation

# Import Project Libraries
from processes.P00_set_packages import *

# ====================================================================================================

# Import shared functions and file paths from other folders
from processes.P06_class_items import TutteDomainError



# ====================================================================================================

class BiPoly:
    """
    Sparse bivariate polynomial in x, y with arbitrary-precision integer
    coefficients.

    Terms are stored as {(xdeg, ydeg): coefficient}; zero coefficients are
    never stored, so equality of values is equality of term maps. Instances
    are immutable.
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple[int, int], int]] = None):
        cleaned = {}
        for (i, j), coefficient in (terms or {}).items():
            if i < 0 or j < 0:
                raise TutteDomainError(f"Negative degree in term x^{i} y^{j}")
            if coefficient:
                cleaned[(int(i), int(j))] = int(coefficient)
        self._terms = cleaned
        self._hash = None

    # ================================================================================================

    @classmethod
    def _wrap(cls, terms: dict) -> "BiPoly":
        # terms already validated and free of zeros
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls._wrap({(0, 0): 1})

    @classmethod
    def monomial(cls, xdeg: int, ydeg: int, coefficient: int = 1) -> "BiPoly":
        return cls({(xdeg, ydeg): coefficient})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls._wrap({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls._wrap({(0, 1): 1})

    @classmethod
    def connector(cls) -> "BiPoly":
        """x + y - xy"""
        return cls._wrap({(1, 0): 1, (0, 1): 1, (1, 1): -1})

    @classmethod
    def geometric_x(cls, k: int) -> "BiPoly":
        """1 + x + ... + x^(k-1); zero when k <= 0."""
        return cls._wrap({(i, 0): 1 for i in range(max(k, 0))})

    @classmethod
    def geometric_y(cls, k: int) -> "BiPoly":
        """1 + y + ... + y^(k-1); zero when k <= 0."""
        return cls._wrap({(0, j): 1 for j in range(max(k, 0))})

    @classmethod
    def from_json(cls, rows: Iterable) -> "BiPoly":
        """
        Inverse of to_json: rows of [xdeg, ydeg, "coefficient"].
        """
        try:
            return cls({(int(i), int(j)): int(c) for i, j, c in rows})
        except (TypeError, ValueError) as e:
            raise TutteDomainError(f"Malformed polynomial rows: {rows!r}") from e

    # ================================================================================================

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, xdeg: int, ydeg: int) -> int:
        return self._terms.get((xdeg, ydeg), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self._terms), default=0)

    @property
    def degree(self) -> int:
        """Total degree; 0 for constants and for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=0)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms ordered by (xdeg desc, ydeg asc), the canonical rendering order."""
        return [(i, j, c) for (i, j), c in sorted(self._terms.items(), key=lambda t: (-t[0][0], t[0][1]))]

    # ================================================================================================

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        result = dict(self._terms)
        for key, coefficient in other._terms.items():
            total = result.get(key, 0) + coefficient
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return BiPoly._wrap(result)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._wrap({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        return self + (-other)

    def __mul__(self, other: Union["BiPoly", int]) -> "BiPoly":
        if isinstance(other, int):
            if other == 0:
                return BiPoly.zero()
            return BiPoly._wrap({key: c * other for key, c in self._terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise TutteDomainError("Negative powers are not polynomials")
        result, base = BiPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __getstate__(self):
        # tuple-wrapped so the zero polynomial still round-trips through pickle
        return (self._terms,)

    def __setstate__(self, state):
        self._terms = state[0]
        self._hash = None

    # ================================================================================================

    def evaluate(self, x0: Union[int, Fraction], y0: Union[int, Fraction]) -> Fraction:
        return evaluate(self, x0, y0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def sign_class(self) -> str:
        """
        Returns "zero", "nonnegative", "nonpositive" or "mixed".
        """
        if not self._terms:
            return "zero"
        signs = {c > 0 for c in self._terms.values()}
        if signs == {True}:
            return "nonnegative"
        if signs == {False}:
            return "nonpositive"
        return "mixed"

    def to_json(self) -> list:
        return [[i, j, str(c)] for i, j, c in self.sorted_terms()]

    def render(self) -> str:
        """
        Canonical text: terms by (xdeg desc, ydeg asc), e.g. "x^3 + x^2 + x + y".
        """
        if not self._terms:
            return "0"
        pieces = []
        for i, j, c in self.sorted_terms():
            monomial = _render_monomial(i, j)
            magnitude = abs(c)
            if monomial == "1":
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}{monomial}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BiPoly({self.render()!r})"


def _render_monomial(i: int, j: int) -> str:
    if i == 0 and j == 0:
        return "1"
    x_part = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
    y_part = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
    return x_part + y_part

# ====================================================================================================

def multiply(a: BiPoly, b: BiPoly) -> BiPoly:
    """
    Exact product of two bivariate polynomials.

    Args:
        a (BiPoly): Left factor.
        b (BiPoly): Right factor.

    Returns:
        BiPoly: a * b.
    """
    if not a._terms or not b._terms:
        return BiPoly.zero()
    result: dict = {}
    for (i1, j1), c1 in a._terms.items():
        for (i2, j2), c2 in b._terms.items():
            key = (i1 + i2, j1 + j2)
            result[key] = result.get(key, 0) + c1 * c2
    return BiPoly._wrap({key: c for key, c in result.items() if c})

# ====================================================================================================

def evaluate(p: BiPoly, x0: Union[int, Fraction], y0: Union[int, Fraction]) -> Fraction:
    """
    Exact value of p at (x0, y0).

    Args:
        p (BiPoly): Polynomial to evaluate.
        x0 (int | Fraction): Value substituted for x.
        y0 (int | Fraction): Value substituted for y.

    Returns:
        Fraction: p(x0, y0).
    """
    x0, y0 = Fraction(x0), Fraction(y0)
    x_powers: dict = {}
    y_powers: dict = {}
    total = Fraction(0)
    for (i, j), c in p._terms.items():
        if i not in x_powers:
            x_powers[i] = x0 ** i
        if j not in y_powers:
            y_powers[j] = y0 ** j
        total += c * x_powers[i] * y_powers[j]
    return total

# ====================================================================================================

def quotient_by_connector(d: BiPoly) -> Optional[BiPoly]:
    """
    Divides d by the connector x + y - xy when the division is exact.

    Coefficients of (x + y - xy) P satisfy d[i,j] = p[i-1,j] + p[i,j-1] - p[i-1,j-1].
    Solving row by row in increasing y-degree gives
        p[a,0] = d[a+1,0]
        p[a,b] = d[a+1,b] - p[a+1,b-1] + p[a,b-1]      (b >= 1)
    The candidate is then multiplied back; any residual means d is not a
    multiple of the connector.

    Args:
        d (BiPoly): Dividend, typically T(H) - T(G).

    Returns:
        Optional[BiPoly]: The unique P with (x + y - xy) P = d, or None.
    """
    if d.is_zero:
        return BiPoly.zero()

    x_top, y_top = d.x_degree, d.y_degree
    coefficients: dict = {}
    for b in range(y_top + 1):
        for a in range(x_top):
            value = d.coefficient(a + 1, b)
            if b:
                value += coefficients.get((a, b - 1), 0) - coefficients.get((a + 1, b - 1), 0)
            if value:
                coefficients[(a, b)] = value

    candidate = BiPoly._wrap(coefficients)
    if multiply(BiPoly.connector(), candidate) != d:
        return None
    return candidate
