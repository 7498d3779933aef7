import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

logger = logging.getLogger(__name__)

PointT = TypeVar('PointT')
ResultT = TypeVar('ResultT')


def map_points(run_point: Callable[[PointT], ResultT], points: Iterable[PointT], jobs: int) -> list[ResultT]:
    """Runs every sweep point, in parallel when jobs > 1. Results keep the order of points."""
    points = list(points)
    if jobs == 1 or len(points) <= 1:
        return [run_point(point) for point in points]
    logger.info('Running %d points on %d processes', len(points), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(run_point, points))
