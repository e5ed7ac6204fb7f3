#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
根追跡と組紐モノドロミーモジュール

折れ線ループに沿って y の根を予測子・修正子法で追跡し、
(Re y, Im y) 順の並びの隣接交換から組紐語を読み取ります。
すべての標準ループの組紐を並べて組紐モノドロミー分解を組み立てます。

交差の符号: 交換の瞬間に Im(右 − 左) > 0 なら +、それ以外は −。

バージョン: 1.0.0
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from braids.hurwitz import factorization_invariants, factorization_product
from models.braid_word import BraidWord, Factorization
from monodromy.curve import (
    AffineCurve,
    DOUBLE_DIGITS,
    NumericContext,
    critical_values,
    derivative_coefficients,
    horner,
)
from monodromy.loops import DEFAULT_VERTICES, loop_order, standard_loops
from utils.errors import (
    CorrectorDivergenceError,
    CorridorError,
    InternalConsistencyError,
    StepUnderflowError,
    TrackingError,
)

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS = {
    "safety": 0.25,
    "min_step": 1e-9,
    "max_step": 0.05,
    "loop_vertices": DEFAULT_VERTICES,
    "workers": 1,
}

NEWTON_ITERATIONS = 12
BASE_TIE_RETRIES = 3


@dataclass
class TrackedLoop:
    """一つのループの追跡結果。"""

    index: int
    critical_value: complex
    path: np.ndarray
    braid: BraidWord
    permutation: tuple
    steps: int = 0
    trace: list = field(default_factory=list)

    def to_dict(self):
        return {
            "index": self.index,
            "critical_value": [self.critical_value.real, self.critical_value.imag],
            "braid": self.braid.to_string(),
            "permutation": list(self.permutation),
            "steps": self.steps,
        }


@dataclass
class MonodromyResult:
    """組紐モノドロミーの計算結果。"""

    curve: AffineCurve
    factorization: Factorization
    invariants: dict
    loops: list
    critical_set: object
    digits: int

    def to_dict(self):
        return {
            "curve": self.curve.to_dict(),
            "factorization": self.factorization.to_dict(),
            "factors": [f.to_string() for f in self.factorization],
            "invariants": self.invariants,
            "loops": [loop.to_dict() for loop in self.loops],
            "critical_set": self.critical_set.to_dict(),
            "digits": self.digits,
        }


def _order(roots):
    return sorted(range(len(roots)), key=lambda k: (float(roots[k].real), float(roots[k].imag)))


def _min_distance(roots):
    n = len(roots)
    return min(float(abs(roots[i] - roots[j])) for i in range(n) for j in range(i + 1, n))


def _newton(coefficients, guess, tolerance):
    derivative = derivative_coefficients(coefficients)
    y = guess
    for _ in range(NEWTON_ITERATIONS):
        slope = horner(derivative, y)
        if slope == 0:
            break
        delta = horner(coefficients, y) / slope
        y = y - delta
        if float(abs(delta)) <= tolerance * (1.0 + float(abs(y))):
            return y
    raise CorrectorDivergenceError("修正子が収束しません")


def _crossings(old_order, new_order, old_roots, new_roots):
    """
    並びの変化を互いに素な隣接交換に分解し、(位置, 符号) のリストを返します。
    分解できなければ None。
    """
    letters = []
    i = 0
    n = len(old_order)
    while i < n:
        if old_order[i] == new_order[i]:
            i += 1
            continue
        if i + 1 < n and old_order[i] == new_order[i + 1] and old_order[i + 1] == new_order[i]:
            left, right = old_order[i], old_order[i + 1]
            before = old_roots[right] - old_roots[left]
            after = new_roots[right] - new_roots[left]
            span = float(before.real - after.real)
            t = float(before.real) / span if span else 0.5
            imag = float(before.imag) + t * float(after.imag - before.imag)
            letters.append((i + 1, 1 if imag > 0 else -1))
            i += 2
            continue
        return None
    return letters


def track_braid(curve, path, settings=None, context=None, record_trace=False):
    """
    折れ線に沿って根を追跡し、組紐語を返します。

    Args:
        curve (AffineCurve): 曲線
        path (array): 複素数の折れ線
        settings (dict): safety、min_step、max_step
        context (NumericContext): 数値演算（省略時は倍精度）
        record_trace (bool): True なら各ステップの根を記録する

    Returns:
        tuple: (自由簡約した BraidWord, 位置 → ラベルの置換, ステップ数, 軌跡)
    """
    settings = {**DEFAULT_SETTINGS, **(settings or {})}
    context = context or NumericContext(DOUBLE_DIGITS)
    tolerance = context.tolerance()
    path = [context.number(complex(p)) for p in path]

    with context.workdps():
        roots = curve.fiber_roots(path[0], context)
        order = _order(roots)
        letters = []
        steps = 0
        trace = [(complex(path[0]), [complex(r) for r in roots])] if record_trace else []
        previous_motion = None

        for start, end in zip(path[:-1], path[1:]):
            length = float(abs(end - start))
            if length == 0:
                continue
            t = 0.0
            h = min(1.0, settings["max_step"] / length)
            while t < 1.0:
                h = min(h, 1.0 - t)
                if h * length < settings["min_step"]:
                    raise StepUnderflowError(f"ステップが下限を下回りました（x = {complex(start + t * (end - start))}）")
                x_new = start + (t + h) * (end - start)
                coefficients = curve.fiber_coefficients(x_new, context)
                if previous_motion is not None:
                    guesses = [r + m * h for r, m in zip(roots, previous_motion)]
                else:
                    guesses = list(roots)
                try:
                    new_roots = [_newton(coefficients, g, tolerance) for g in guesses]
                except CorrectorDivergenceError:
                    h /= 2
                    previous_motion = None
                    continue
                separation = min(_min_distance(roots), _min_distance(new_roots))
                displacement = max(float(abs(a - b)) for a, b in zip(new_roots, roots))
                if separation == 0 or displacement > settings["safety"] * separation:
                    h /= 2
                    previous_motion = None
                    continue
                new_order = _order(new_roots)
                crossings = _crossings(order, new_order, roots, new_roots)
                if crossings is None:
                    h /= 2
                    previous_motion = None
                    continue
                letters.extend(crossings)
                # 割線予測子: 単位パラメータあたりの根の移動
                previous_motion = [(a - b) / h for a, b in zip(new_roots, roots)]
                roots, order = new_roots, new_order
                t += h
                steps += 1
                if record_trace:
                    trace.append((complex(x_new), [complex(r) for r in roots]))
                h *= 1.5
            previous_motion = None

    braid = BraidWord(curve.n, letters).freely_reduced()
    permutation = tuple(order)
    if braid.permutation() != permutation:
        raise InternalConsistencyError(
            f"組紐の置換 {braid.permutation()} が追跡した置換 {permutation} と一致しません"
        )
    return braid, permutation, steps, trace


def _compose(first, second):
    return tuple(first[k] for k in second)


def _base_fiber_tied(curve, base, context):
    with context.workdps():
        roots = curve.fiber_roots(context.number(base), context)
    reals = sorted(float(r.real) for r in roots)
    scale = 1.0 + max(abs(r) for r in reals)
    return any(b - a < 1e-8 * scale for a, b in zip(reals, reals[1:]))


def _track_all(curve, critical_set, settings, context, record_trace):
    paths = standard_loops(critical_set, settings["loop_vertices"])
    order = loop_order(critical_set)

    def run(item):
        position, (index, path) = item
        braid, permutation, steps, trace = track_braid(curve, path, settings, context, record_trace)
        logger.debug(f"ループ {position + 1}: {braid.to_string()}（{steps} ステップ）")
        return TrackedLoop(position + 1, critical_set.points[index], path, braid, permutation, steps, trace)

    items = list(enumerate(zip(order, paths)))
    workers = int(settings.get("workers", 1))
    if workers > 1 and not context.uses_mpmath:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, items))
    return [run(item) for item in items]


def braid_monodromy(curve, precision=DOUBLE_DIGITS, max_precision=60, settings=None, record_trace=False):
    """
    曲線の組紐モノドロミー分解を計算します。

    Args:
        curve (AffineCurve | str): 無限遠で一般的な曲線
        precision (int): 開始の十進桁数
        max_precision (int): 精度の上限
        settings (dict): 追跡のステップ制御（ConfigManager.get_tracker_settings() の形式）
        record_trace (bool): True なら各ループの根の軌跡を記録する

    Returns:
        MonodromyResult: 分解、不変量、各ループの追跡結果
    """
    if not isinstance(curve, AffineCurve):
        curve = AffineCurve(curve)
    settings = {**DEFAULT_SETTINGS, **(settings or {})}
    critical_set = critical_values(curve, precision, max_precision)

    context = NumericContext(critical_set.digits)
    for _ in range(BASE_TIE_RETRIES):
        if not _base_fiber_tied(curve, critical_set.base, context):
            break
        critical_set = critical_set.with_base_point(critical_set.base_point + 1.0)
        logger.info(f"基点のファイバーで Re が重なるため基点を {critical_set.base_point} に移します")
    else:
        if _base_fiber_tied(curve, critical_set.base, context):
            logger.error(f"基点 {critical_set.base} のファイバーの Re の重なりが解消しません")
            raise CorridorError("基点のファイバーでストランドの並びが一意に決まりません")

    digits = context.digits
    while True:
        try:
            loops = _track_all(curve, critical_set, settings, context, record_trace)
            break
        except TrackingError as e:
            if digits * 2 > max_precision:
                raise
            logger.warning(f"追跡に失敗したため精度を {digits} から {digits * 2} 桁に上げます: {e}")
            digits *= 2
            context = NumericContext(digits)

    factorization = Factorization(curve.n, [loop.braid for loop in loops])
    composed = tuple(range(curve.n))
    for loop in loops:
        composed = _compose(composed, loop.permutation)
    product_permutation = factorization_product(factorization).permutation() if loops else composed
    if composed != product_permutation:
        raise InternalConsistencyError("分解の積の置換がループの置換の合成と一致しません")

    invariants = factorization_invariants(factorization) if loops else {}
    logger.info(f"組紐モノドロミー: 因子 {len(factorization)} 個（{digits} 桁）")
    return MonodromyResult(curve, factorization, invariants, loops, critical_set, digits)
