import functools

from classes.order_term import FinPow, FinSum, LexProd, OrdLeaf, Reverse


@functools.total_ordering
class Point:
    """
    Point of an explicit finite order, compared through its position key
    """
    def __init__(self, key, label):
        self.key = key
        self.label = label

    def __lt__(self, other):
        return self.key < other.key

    def __eq__(self, other):
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f'Point({self.label})'


class FiniteOrder:
    """
    Explicit finite linear order; points are kept sorted
    """
    def __init__(self, points):
        self.points = sorted(points)

    @classmethod
    def chain(cls, n, name='x'):
        return cls(Point((i,), (name, i)) for i in range(n))

    def __len__(self):
        return len(self.points)

    @property
    def labels(self):
        return [point.label for point in self.points]

    def sum(self, other):
        return FiniteOrder([Point((0, p.key), p.label) for p in self.points]
                           + [Point((1, p.key), p.label) for p in other.points])

    def lex_product(self, other):
        """
        Every point of self replaced by a copy of other
        """
        return FiniteOrder(Point((p.key, q.key), (p.label, q.label))
                           for p in self.points for q in other.points)

    def reverse(self):
        return FiniteOrder(Point(_Reversed(p.key), p.label) for p in self.points)

    def power(self, n):
        result = self
        for _ in range(n - 1):
            result = result.lex_product(self)
        return result

    def is_isomorphic(self, other):
        # finite chains are determined by their size
        return len(self) == len(other)

    def is_sorted(self):
        return all(self.points[i] < self.points[i + 1] for i in range(len(self.points) - 1))


@functools.total_ordering
class _Reversed:
    __slots__ = ('key',)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return other.key < self.key

    def __eq__(self, other):
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)


def evaluate_finite(term):
    """
    Explicit finite order denoted by a term over finite ordinal leaves
    :raise ValueError: if the term has an infinite or opaque leaf
    """
    if isinstance(term, OrdLeaf):
        if not term.value.is_finite:
            raise ValueError(f'{term.value} is not finite')
        return FiniteOrder.chain(term.value.finite_value, name=str(term.value))
    if isinstance(term, Reverse):
        return evaluate_finite(term.inner).reverse()
    if isinstance(term, FinSum):
        result = evaluate_finite(term.parts[0])
        for part in term.parts[1:]:
            result = result.sum(evaluate_finite(part))
        return result
    if isinstance(term, LexProd):
        return evaluate_finite(term.left).lex_product(evaluate_finite(term.right))
    if isinstance(term, FinPow):
        return evaluate_finite(term.base).power(term.exponent)
    raise ValueError(f'{type(term).__name__} has no finite model')
