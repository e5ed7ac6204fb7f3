#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
標準ループモジュール

基点 M のすぐ下の点 M − iε から実軸の下の通路を左へ進み、臨界値の円を反時計回りに一周して
同じ道を戻る折れ線ループを作ります。ループは Re の降順（同じ Re では Im の降順）、
つまり M に近いものから並べ、これを基本群の生成系とします。

バージョン: 1.0.0
"""

import logging

import numpy as np

from utils.errors import CorridorError

logger = logging.getLogger(__name__)

DEFAULT_VERTICES = 32
CLEARANCE = 0.25


def _segment_distance(a, b, z):
    # 線分 ab と点 z の距離
    direction = b - a
    length2 = abs(direction) ** 2
    if length2 == 0:
        return abs(z - a)
    t = ((z - a) * direction.conjugate()).real / length2
    t = min(max(t, 0.0), 1.0)
    return abs(a + t * direction - z)


def _clear(a, b, obstacles, radius):
    return all(_segment_distance(a, b, z) > radius for z in obstacles)


def _approach(critical_set, j, depth):
    # 通路から円 j の最下点へ上る経路。下の円に遮られたら右側を回る
    rho = critical_set.loop_radius
    target = critical_set.points[j]
    others = [p for k, p in enumerate(critical_set.points) if k != j]
    bottom = complex(target.real, target.imag - rho)
    guard = rho * (1.0 + CLEARANCE)
    candidates = sorted({target.real} | {p.real + guard for p in others if p.real + guard > target.real})
    for column in candidates:
        foot = complex(column, depth)
        turn = complex(column, bottom.imag)
        if _clear(foot, turn, others, guard) and _clear(turn, bottom, others, guard):
            return [foot, turn, bottom] if column != target.real else [foot, bottom]
    raise CorridorError(f"臨界値 {target} への通路を作れません")


def _circle(center, rho, vertices):
    # 最下点から反時計回りに一周
    angles = -np.pi / 2 + 2 * np.pi * np.arange(vertices + 1) / vertices
    return [center + rho * complex(np.cos(a), np.sin(a)) for a in angles]


def _depth(critical_set):
    return min(p.imag for p in critical_set.points) - critical_set.loop_radius * (1.0 + 2 * CLEARANCE)


def loop_order(critical_set):
    """
    ループの順序（臨界値の添字のリスト）。

    通路から上る列の Re の降順、同じ列では Im の降順です。遮られずに上れる
    臨界値では列は Re x_j なので、Re の降順・Im の降順と一致します。
    """
    if not critical_set.points:
        return []
    depth = _depth(critical_set)
    columns = {j: _approach(critical_set, j, depth)[0].real for j in range(len(critical_set.points))}
    return sorted(columns, key=lambda j: (-columns[j], -critical_set.points[j].imag))


def standard_loops(critical_set, vertices=DEFAULT_VERTICES):
    """
    臨界値ごとの標準ループを作ります。

    Args:
        critical_set (CriticalSet): 臨界値と基点
        vertices (int): 円を近似する折れ線の頂点数

    Returns:
        list: ループ順の numpy 複素配列（始点と終点は M − iε）
    """
    if not critical_set.points:
        return []
    rho = critical_set.loop_radius
    radii = critical_set.radii
    if any(abs(a - b) <= 2 * rho for i, a in enumerate(critical_set.points)
           for b in critical_set.points[i + 1:]):
        raise CorridorError("ループの円が重なっています")
    if any(r >= rho for r in radii):
        raise CorridorError("誤差円板がループの円より大きいです")
    depth = _depth(critical_set)
    base = critical_set.base
    corner = complex(critical_set.base_point, depth)

    loops = []
    for j in loop_order(critical_set):
        approach = _approach(critical_set, j, depth)
        outward = [base, corner] + approach
        circle = _circle(critical_set.points[j], rho, vertices)
        path = outward + circle[1:] + list(reversed(outward))[1:]
        loops.append(np.array(path, dtype=complex))
    return loops


def winding_number(path, point):
    """
    閉じた折れ線が点の周りを回る回数。
    """
    path = np.asarray(path, dtype=complex)
    angles = np.angle((path[1:] - point) / (path[:-1] - point))
    return int(round(float(np.sum(angles)) / (2 * np.pi)))


def reversed_path(path):
    return np.asarray(path, dtype=complex)[::-1].copy()
