#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
例外クラスモジュール

curvetwist 全体で送出される例外の階層を定義します。
ライブラリ層はここで定義した例外を送出し、ビュー層が捕捉して
RunReport のチェック結果に変換します。

バージョン: 1.0.0
"""


class CurveTwistError(Exception):
    """curvetwist の全例外の基底クラス。"""


class ParseError(CurveTwistError, ValueError):
    """多項式・組紐語・行列テキストの構文エラー。"""


class DimensionError(CurveTwistError, ValueError):
    """行列サイズ・ストランド数・階数の不整合。"""


class DegenerateInputError(CurveTwistError, ValueError):
    """零多項式、恒等的に零の行列式、退化した二次曲線など。"""


class NotSquarefreeError(CurveTwistError, ValueError):
    """無平方であるべき多項式が重根を持つ場合。"""


class BasepointOnCurveError(CurveTwistError, ValueError):
    """写像の基点が曲線上にある場合（部分空間への制限は未対応）。"""

    def __init__(self, detail=""):
        message = (
            "写像の基点が曲線上にあります。この場合は一般化 Bezout 行列を"
            "さらに制限する必要があり、その手続きは未実装です"
        )
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class IrregularParametrizationError(CurveTwistError, ValueError):
    """枝の媒介変数表示が原点で正則でない場合（r1' が 0 で消える）。"""


class ClassificationError(CurveTwistError, ValueError):
    """交点の重複度の組が 7 つのケースのいずれにも該当しない場合。"""


class TrackingError(CurveTwistError, RuntimeError):
    """根の追跡の失敗。"""


class StepUnderflowError(TrackingError):
    """ステップ幅が下限を下回った場合。"""


class CorrectorDivergenceError(TrackingError):
    """修正子（ニュートン法）が収束しなかった場合。"""


class CorridorError(CurveTwistError, RuntimeError):
    """臨界値の円板が重なり、標準ループを構成できない場合。"""


class PrecisionError(CurveTwistError, RuntimeError):
    """要求精度では根を分離できない場合。"""


class FixtureError(CurveTwistError, ValueError):
    """フィクスチャファイルの欠落または不正な内容。"""


class InternalConsistencyError(CurveTwistError, RuntimeError):
    """正しい入力では起こりえない内部不整合。"""
