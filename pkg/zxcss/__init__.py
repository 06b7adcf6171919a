"""
zxcss
=====

CSS quantum error correcting codes as ZX diagrams.  zxcss builds the ZX
and XZ normal forms of CSS and subsystem CSS encoders, evaluates diagrams
densely, and uses the normal forms to push logical operations through an
encoder, to morph codes along a qubit subset and to fix or switch the gauge
of a subsystem code.  Every transformation checks the identity it claims
before returning.

Codes, diagrams and results export to JSON, Graphviz and GraphML through a
report repository modelled on template plugins.
"""
__version__ = '0.1.0'

from .code import (CssCode, SubsystemCssCode, new_css,  # noqa: E402
                   new_subsystem)
from .catalog import CodeCatalog, get_code  # noqa: E402
from .zx import ZxDiagram  # noqa: E402
from .nf import zx_normal_form, xz_normal_form  # noqa: E402
from .sem import evaluate, equal_up_to_scalar  # noqa: E402
from .xform import (VerificationError, push_through, morph,  # noqa: E402
                    gauge_fix, switch)
from . import templates  # noqa: E402
from .reporting import ExportLoader, Report, ReportRepository  # noqa: E402

__all__ = ['CssCode', 'SubsystemCssCode', 'new_css', 'new_subsystem',
           'CodeCatalog', 'get_code', 'ZxDiagram', 'zx_normal_form',
           'xz_normal_form', 'evaluate', 'equal_up_to_scalar',
           'VerificationError', 'push_through', 'morph', 'gauge_fix',
           'switch', 'ExportLoader', 'Report', 'ReportRepository',
           'templates']
