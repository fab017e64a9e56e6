from typing import Iterable, List, Union

from .transformation import Transformation
from .universe import Universe


def make_universe(n: int, m: int, k: int) -> Universe:
    return Universe(n=n, m=m, k=k)


def make_map(images: Union[str, Iterable[int]]) -> Transformation:
    """A Transformation from a literal ("0,0,2") or an image sequence."""
    if isinstance(images, str):
        return Transformation.from_literal(images)
    return Transformation(images=tuple(images))


def make_maps(*literals: str) -> List[Transformation]:
    return [make_map(literal) for literal in literals]
