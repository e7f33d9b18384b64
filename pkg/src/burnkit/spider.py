"""Constructive ceil(sqrt(n))-round burning for paths and spiders.

burn_path tiles a path with balls of radii b-1, b-2, ..., 0 (b = ceil sqrt
of the order), each placed flush against the unburned prefix, which covers
since the ball sizes sum to b*b >= order.

burn_spider reduces a spider (head vertex plus m >= 3 pendant paths) to a
cover within budget a = ceil_sqrt(n):

* order <= 25: take an exact optimal schedule and restate it as a cover.
* some arm has length >= 2a-1: one radius a-1 ball removes the 2a-1 tip
  vertices of the longest arm; the remainder (a smaller spider, or a path
  through the head once only two arms survive) has ceil-sqrt at most a-1,
  so recursion stacks strictly shrinking radii under the same budget.
* the exceptional tight shape, a-1 arms all of length a+1 (n = a*a): a
  ball of radius a-1 on the first arm next to the head reaches everything
  except a length-3 stub on each other arm and the first arm's leaf;
  radii a-2, ..., 1 centered on the stubs and 0 on the leaf finish it.
* otherwise a radius a-1 ball at the head burns all but the residual arm
  tails (lengths h_i = a_i - (a-1) <= a-1, for arms with a_i >= a).  With
  t residuals: t <= a/2 or t == a-1 gives each residual its own ball of
  radius a-1-k; odd a with 2t == a+1 does the same except the last
  residual takes a radius (a-3)/2 ball plus a radius 1 ball at its leaf;
  for the t in between, the residuals form a path forest whose greedy
  cover fits under a-1, so the greedy burner is delegated to.

Every constructed cover is converted to a schedule and verified; a branch
that failed its own applicability arithmetic raises
InternalContradictionError rather than returning something unchecked.
"""

from __future__ import annotations

from .bounds import ub_floor
from .burning import cover_from_schedule, schedule_from_cover, verify_schedule
from .errors import InstanceError, InternalContradictionError
from .exact import exact_burning_number
from .greedy import _greedy_pairs
from .model import (
    HEAD,
    BudgetedCover,
    BurnSchedule,
    PathForest,
    Spider,
    VertexId,
    arm_vertex,
    ceil_sqrt,
    comp_vertex,
    path_forest_to_graph,
    spider_to_graph,
)

_EXACT_BASE = 25


def _path_pairs(order: int) -> list[tuple[int, int]]:
    """Tiling (position, radius) pairs covering a path, radii b-1 down to 0."""
    beta = ceil_sqrt(order)
    pos = 0
    out = []
    for r in range(beta - 1, -1, -1):
        if pos >= order:
            break
        c = min(pos + r, order - 1 - r)
        out.append((c, r))
        pos = c + r + 1
    return out


def burn_path(order: int) -> tuple[BudgetedCover, BurnSchedule]:
    """Cover and verified schedule burning a path in ceil_sqrt(order) rounds."""
    pf = PathForest((order,))
    pairs = tuple((comp_vertex(0, c), r) for c, r in _path_pairs(order))
    cover = BudgetedCover(pairs, ceil_sqrt(order))
    g = path_forest_to_graph(pf)
    schedule = schedule_from_cover(g, cover)
    if not verify_schedule(g, schedule):
        raise InternalContradictionError("path tiling failed verification")
    return cover, schedule


def reduce_long_arm(sp: Spider) -> tuple[tuple[VertexId, int], Spider | PathForest]:
    """Split off the 2a-1 tip of the longest arm as one radius a-1 ball.

    Only applies when that arm has length at least 2a-1 (a = ceil_sqrt of
    the order).  Returns the (center, radius) pair and the remainder,
    which is a smaller spider, or a single path once only two arms are
    left.  Remainder vertices keep their positions; only arm indices are
    renumbered (canonical order sorts by length).
    """
    alpha = ceil_sqrt(sp.n)
    longest = sp.arms[0]
    if longest < 2 * alpha - 1:
        raise InstanceError(
            f"longest arm {longest} is shorter than {2 * alpha - 1}, nothing to split"
        )
    pair = (arm_vertex(0, longest - (alpha - 1)), alpha - 1)
    stub = longest - (2 * alpha - 1)
    lens = ([stub] if stub else []) + list(sp.arms[1:])
    if len(lens) >= 3:
        return pair, Spider(tuple(lens))
    return pair, PathForest((sum(lens) + 1,))


def burn_small_spider(sp: Spider) -> tuple[BudgetedCover, BurnSchedule]:
    """Optimal burn of a spider of order <= 25, cover budget ceil_sqrt(n)."""
    if sp.n > _EXACT_BASE:
        raise InstanceError(f"only for spiders of order at most {_EXACT_BASE}")
    g = spider_to_graph(sp)
    k, schedule = exact_burning_number(g)
    alpha = ceil_sqrt(sp.n)
    if k > alpha:
        raise InternalContradictionError(
            f"spider of order {sp.n} needed {k} > ceil_sqrt rounds"
        )
    cover = BudgetedCover(cover_from_schedule(g, schedule).pairs, alpha)
    return cover, schedule


def burn_spider(sp: Spider) -> tuple[BudgetedCover, BurnSchedule]:
    """Cover and verified schedule burning a spider in <= ceil_sqrt(n) rounds."""
    alpha = ceil_sqrt(sp.n)
    pairs = _spider_pairs(sp.arms)
    cover = BudgetedCover(tuple(pairs), alpha)
    g = spider_to_graph(sp)
    schedule = schedule_from_cover(g, cover)
    if not verify_schedule(g, schedule):
        raise InternalContradictionError("spider cover failed verification")
    return cover, schedule


def _spider_pairs(arms: tuple[int, ...]) -> list[tuple[VertexId, int]]:
    """Cover pairs for the spider with these arms (sorted non-increasing).

    The radii always fit the budget ceil_sqrt(1 + sum(arms)): each branch
    either uses radii a-1, a-2, ... directly or prepends a-1 to a
    recursive cover whose own budget is at most a-1.
    """
    n = 1 + sum(arms)
    alpha = ceil_sqrt(n)

    if n <= _EXACT_BASE:
        g = spider_to_graph(Spider(arms))
        k, schedule = exact_burning_number(g)
        if k > alpha:
            raise InternalContradictionError(
                f"spider of order {n} needed {k} > ceil_sqrt rounds"
            )
        return list(cover_from_schedule(g, schedule).pairs)

    if arms[0] >= 2 * alpha - 1:
        return _split_longest(arms, alpha)

    if len(arms) == alpha - 1 and arms[0] == alpha + 1 and arms[-1] == alpha + 1:
        # n == alpha**2 exactly; the head ball cannot finish this shape
        pairs = [(arm_vertex(0, 1), alpha - 1)]
        pairs += [(arm_vertex(i, alpha), alpha - 1 - i) for i in range(1, alpha - 1)]
        pairs.append((arm_vertex(0, alpha + 1), 0))
        return pairs

    return _head_ball(arms, alpha)


def _split_longest(arms: tuple[int, ...], alpha: int) -> list[tuple[VertexId, int]]:
    longest = arms[0]
    pair = (arm_vertex(0, longest - (alpha - 1)), alpha - 1)
    stub = longest - (2 * alpha - 1)
    survivors = [(arms[i], i) for i in range(1, len(arms))]
    if stub:
        survivors.append((stub, 0))
    if len(survivors) >= 3:
        survivors.sort(key=lambda li: (-li[0], li[1]))
        sub = _spider_pairs(tuple(length for length, _ in survivors))
        out = [pair]
        for v, r in sub:
            if v[0] == "a":
                out.append((arm_vertex(survivors[v[1]][1], v[2]), r))
            else:
                out.append((v, r))
        return out
    # two arms and the head left over: a path, tiled and mapped back
    # (first arm reversed leaf-to-head, then the head, then the second arm)
    first, second = arms[1], arms[2]
    out = [pair]
    for c, r in _path_pairs(first + 1 + second):
        if c < first:
            out.append((arm_vertex(1, first - c), r))
        elif c == first:
            out.append((HEAD, r))
        else:
            out.append((arm_vertex(2, c - first), r))
    return out


def _head_ball(arms: tuple[int, ...], alpha: int) -> list[tuple[VertexId, int]]:
    residuals = sorted(
        ((a - (alpha - 1), i) for i, a in enumerate(arms) if a >= alpha),
        key=lambda hi: (-hi[0], hi[1]),
    )
    t = len(residuals)
    if t >= alpha:
        raise InternalContradictionError(
            f"{t} residual tails of length >= 1 contradict order <= {alpha}**2"
        )
    pairs: list[tuple[VertexId, int]] = [(HEAD, alpha - 1)]
    if t == 0:
        return pairs

    def middle_ball(k: int, h: int, i: int) -> tuple[VertexId, int]:
        rho = alpha - 1 - k
        if 2 * rho + 1 < h:
            raise InternalContradictionError(
                f"radius {rho} ball cannot cover a residual of length {h}"
            )
        return (arm_vertex(i, alpha + (h - 1) // 2), rho)

    if 2 * t <= alpha or t == alpha - 1:
        for k, (h, i) in enumerate(residuals, start=1):
            pairs.append(middle_ball(k, h, i))
        return pairs

    if alpha % 2 == 1 and 2 * t == alpha + 1:
        for k, (h, i) in enumerate(residuals[:-1], start=1):
            pairs.append(middle_ball(k, h, i))
        h, i = residuals[-1]
        tip = alpha - 1 + h
        rho = (alpha - 3) // 2
        ctr = min(alpha + rho, tip)
        if ctr - rho > alpha or ctr + rho < tip - 2:
            raise InternalContradictionError("split tail left a gap uncovered")
        pairs.append((arm_vertex(i, ctr), rho))
        pairs.append((arm_vertex(i, tip), 1))
        return pairs

    # remaining range: floor(a/2 + 3/2) <= t <= a-2.  The residuals form a
    # path forest whose greedy cover fits strictly under the head radius.
    if not ((alpha + 3) // 2 <= t <= alpha - 2):
        raise InternalContradictionError(f"unhandled residual count {t} at {alpha=}")
    forest = PathForest(tuple(h for h, _ in residuals))
    if ub_floor(forest) > alpha - 1:
        raise InternalContradictionError("residual forest too heavy to delegate")
    delegated, _ = _greedy_pairs(forest)
    if len(delegated) > alpha - 1:
        raise InternalContradictionError("greedy pair count exceeds the budget")
    for v, r in delegated:
        pairs.append((arm_vertex(residuals[v[1]][1], alpha + v[2]), r))
    return pairs
