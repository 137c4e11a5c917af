# /__init__.py
from .Models.series import PowerSeries
from .Models.grid import GridSpec
from .Models.families import ClassSpec, MoebiusParams, AnalyticFn, SeriesFn
from .Models.radius import RadiusQuery, RadiusValue, Theorem
from .Models.verify import RadiusReport, Lemma, LemmaKind
from .Models.model_types import Types

__all__ = ['PowerSeries', 'GridSpec', 'ClassSpec', 'MoebiusParams', 'AnalyticFn', 'SeriesFn',
           'RadiusQuery', 'RadiusValue', 'Theorem', 'RadiusReport', 'Lemma', 'LemmaKind', 'Types']
