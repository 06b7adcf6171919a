# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Export of codes, diagrams and results through Genshi templates.

Reports are indexed by the class of the object they render and by the
mimetype they produce; JSON goes through :mod:`zxcss.schema` instead.
"""
import os
import sys

from genshi.template import TemplateLoader

from zxcss.code import CssCode, SubsystemCssCode, css_parameters
from zxcss.xform import (EtaFactorization, GaugeFixResult, MorphResult,
                         VerificationReport)
from zxcss.zx import ZxDiagram

TEXT = 'text/plain'
DOT = 'text/vnd.graphviz'
GRAPHML = 'application/graphml+xml'


def _absolute(path):
    "path made absolute against the directory of the module two frames up"
    if os.path.isabs(path):
        return path
    module = sys._getframe(2).f_globals['__file__']
    return os.path.abspath(os.path.join(os.path.dirname(module), path))


def _guess_type(mime):
    "the plugin codename of an export mimetype, None when unknown"
    major, _, subtype = mime.lower().partition('/')
    if major == 'text':
        return 'dot' if subtype in ('vnd.graphviz', 'x-dot') else 'text'
    elif major == 'application':
        return 'graphml' if 'graphml' in subtype else subtype


class ExportLoader(TemplateLoader):
    """Template loader choosing the template class from the mimetype of the
    export.

    Plugins register their template class under a codename with
    :meth:`add_factory`, optionally with a function mapping further
    mimetypes onto that codename.
    """

    factories = {}

    mime_func = [_guess_type]

    def get_type(self, mime):
        "the codename of mime, asking the most recent plugins first"
        for func in reversed(self.mime_func):
            codename = func(mime)
            if codename is not None:
                return codename

    def load(self, path, mime=None, relative_to=None, cls=None):
        if mime is None and cls is None:
            raise ValueError('load needs a mimetype or a template class')
        if mime is not None:
            codename = self.get_type(mime)
            if codename not in self.factories:
                raise ValueError('no template plugin for %s' % mime)
            cls = self.factories[codename]
        return super(ExportLoader, self).load(
            path, cls=cls, relative_to=relative_to)

    @classmethod
    def add_factory(cls, codename, template_factory, id_function=None):
        cls.factories[codename] = template_factory
        if id_function is not None:
            cls.mime_func.append(id_function)


default_loader = ExportLoader(auto_reload=True)


class DefaultFactory:
    """Passes the keyword arguments of a report call through to the template.

    Data factories are built with the class and mimetype of the report they
    serve; this one ignores both.
    """

    def __init__(self, klass=None, mimetype=None):
        self.klass = klass
        self.mimetype = mimetype

    def __call__(self, **kwargs):
        return dict(kwargs)


default_factory = DefaultFactory()


def _matrix_lines(label, rows, kind):
    lines = []
    for i, bits in enumerate(rows.to_bitstrings()):
        support = ','.join(str(q + 1) for q in rows.support(i))
        lines.append('%s  %s:%s' % (bits, kind, support))
    return label, lines


class CodeFactory(DefaultFactory):
    "generator rows of a code, as bit strings and Pauli text"

    def __call__(self, o, with_distance=False, **kwargs):
        data = super(CodeFactory, self).__call__(o=o, **kwargs)
        if isinstance(o, SubsystemCssCode):
            sections = [_matrix_lines('X stabilizers', o.Sx, 'X'),
                        _matrix_lines('Z stabilizers', o.Sz, 'Z'),
                        _matrix_lines('X gauges', o.Gx, 'X'),
                        _matrix_lines('Z gauges', o.Gz, 'Z')]
        else:
            sections = [_matrix_lines('X stabilizers', o.G, 'X'),
                        _matrix_lines('Z stabilizers', o.H, 'Z')]
        sections += [_matrix_lines('X logicals', o.Lx, 'X'),
                     _matrix_lines('Z logicals', o.Lz, 'Z')]
        data.update(name=o.name or 'code',
                    parameters=css_parameters(o, with_distance),
                    sections=[s for s in sections if s[1]])
        return data


def _status(flag):
    return 'PASS' if flag else 'FAIL'


class ResultFactory(DefaultFactory):
    "adds parameter strings and a PASS/FAIL status for result objects"

    def __call__(self, o, with_distance=True, **kwargs):
        data = super(ResultFactory, self).__call__(o=o, **kwargs)
        data['params'] = lambda code: css_parameters(code, with_distance)
        if isinstance(o, VerificationReport):
            data['status'] = _status(o.passed)
            data['mark'] = _status
        else:
            data['status'] = _status(o.verified)
        return data


class Report:
    "A template file bound to its mimetype and data factory."

    def __init__(self, path, mimetype,
                 factory=default_factory, loader=default_loader):
        self.fpath = path
        self.mimetype = mimetype
        self.data_factory = factory
        self.tmpl_loader = loader
        self.filters = []

    def __call__(self, **kwargs):
        "the stream of the template fed with the factory's data"
        template = self.tmpl_loader.load(self.fpath, self.mimetype)
        stream = template.generate(**self.data_factory(**kwargs))
        return stream.filter(*self.filters) if self.filters else stream

    def __repr__(self):
        return '<zxcss %s report on %s>' % (self.mimetype, self.fpath)


class ReportIndex:
    "the reports of one class, by mimetype and by name"

    def __init__(self):
        self.mimetypes = {}
        self.ids = {}


class ReportRepository:
    """Reports indexed by the class of the object they render.

    A class may have several reports per mimetype; :meth:`render` uses the
    first one registered, looking through the base classes as well.
    """

    def __init__(self, datafactory=DefaultFactory):
        self.classes = {}
        self.default_factory = datafactory
        self.loader = default_loader

    def add_report(self, klass, mimetype, template_path, data_factory=None,
                   report_name='default', description=''):
        """Registers the template at template_path, relative to the calling
        module, for objects of klass.

        data_factory is a class called with (klass, mimetype); its instance
        turns the keyword arguments of a report call into template data.
        """
        factory = (data_factory or self.default_factory)(klass, mimetype)
        report = Report(_absolute(template_path), mimetype, factory,
                        self.loader)
        index = self.classes.setdefault(klass, ReportIndex())
        index.ids[report_name] = report, mimetype, description
        index.mimetypes.setdefault(mimetype, []).append(
            (report, report_name))

    def by_mime(self, klass, mimetype):
        "(report, name) pairs of klass for mimetype"
        return self.classes[klass].mimetypes[mimetype]

    def by_id(self, klass, id):
        "(report, mimetype, description) of the report named id"
        return self.classes[klass].ids[id]

    def render(self, obj, mimetype=TEXT, **kwargs):
        """Renders obj with its first report for mimetype; returns text, or
        bytes for GraphML."""
        for klass in type(obj).__mro__:
            index = self.classes.get(klass)
            if index is not None and mimetype in index.mimetypes:
                report, _ = index.mimetypes[mimetype][0]
                encoding = 'utf-8' if mimetype == GRAPHML else None
                return report(o=obj, **kwargs).render(encoding=encoding)
        raise KeyError('no %s report for %s' % (mimetype,
                                                 type(obj).__name__))


def default_repository():
    "a repository with the reports shipped with zxcss"
    repository = ReportRepository()
    for klass, path, factory in (
            (CssCode, 'templates/code.tmpl', CodeFactory),
            (SubsystemCssCode, 'templates/code.tmpl', CodeFactory),
            (MorphResult, 'templates/morph.tmpl', ResultFactory),
            (GaugeFixResult, 'templates/gaugefix.tmpl', ResultFactory),
            (EtaFactorization, 'templates/eta.tmpl', ResultFactory),
            (VerificationReport, 'templates/verify.tmpl', ResultFactory)):
        repository.add_report(klass, TEXT, path, data_factory=factory)
    from zxcss.templates.dot import DiagramFactory
    repository.add_report(ZxDiagram, DOT, 'templates/diagram.dot',
                          data_factory=DiagramFactory,
                          description='Graphviz drawing')
    repository.add_report(ZxDiagram, GRAPHML, 'templates/diagram.graphml',
                          data_factory=DiagramFactory,
                          description='GraphML document')
    return repository
