from ..exceptions import OracleViolation
from ..order import popcount


class BaseOracle:
    """Refinement oracle: ``(model, member, prime) -> member``."""

    def candidates(self, model, prime: int):
        found = [i for i, cover in enumerate(model.cover) if cover >> prime & 1]
        if not found:
            raise OracleViolation(f'no member lies over prime {prime}', witness=prime)
        return found

    def __call__(self, model, member: int, prime: int) -> int:  # nocv
        raise NotImplementedError


class IntersectionOracle(BaseOracle):
    """Meet with the first member lying over the prime."""

    def __call__(self, model, member: int, prime: int) -> int:
        return model.family.meet(member, self.candidates(model, prime)[0])


class GreedyOracle(BaseOracle):
    """Meet with the member whose meet lies over the most primes."""

    def __call__(self, model, member: int, prime: int) -> int:
        meets = [model.family.meet(member, other) for other in self.candidates(model, prime)]
        return max(meets, key=lambda meet: (popcount(model.cover[meet]), -meet))
