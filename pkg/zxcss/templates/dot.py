# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Graphviz export of diagrams.

Z spiders are green circles, X spiders red ones and open wires end on
white squares; DOT is written only, never read back.
"""
from zxcss.reporting import DefaultFactory, ExportLoader
from zxcss.templates.base import Template as TextTemplate

STYLES = {
    'Z': ('circle', '#99dd99'),
    'X': ('circle', '#ff8888'),
    'B': ('square', '#ffffff'),
    }


class DiagramFactory(DefaultFactory):
    "flattens a diagram into the node and edge lists the templates walk"

    def __call__(self, o, title=None, **kwargs):
        data = super(DiagramFactory, self).__call__(o=o, **kwargs)
        ports = {b: 'in%d' % (i + 1) for i, b in enumerate(o.inputs)}
        ports.update((b, 'out%d' % (i + 1)) for i, b in enumerate(o.outputs))
        nodes = []
        for v in sorted(o.graph):
            kind = o.kind(v)
            shape, color = STYLES[kind]
            if kind == 'B':
                label = ports[v]
            else:
                label = 'π' if o.phase(v) else ''
            nodes.append({'name': 'n%d' % v, 'kind': kind,
                          'phase': o.phase(v), 'label': label,
                          'shape': shape, 'color': color,
                          'port': ports.get(v, '-')})
        data.update(
            title=title or 'diagram', nodes=nodes,
            edges=sorted(('n%d' % a, 'n%d' % b) for a, b in o.graph.edges()),
            inputs=['n%d' % b for b in o.inputs],
            outputs=['n%d' % b for b in o.outputs])
        return data


class Template(TextTemplate):
    "A DOT templating object"

    @staticmethod
    def id_function(mimetype):
        "The function used to return the codename."
        if mimetype in ('text/vnd.graphviz', 'text/x-dot'):
            return 'dot'


ExportLoader.add_factory('dot', Template, Template.id_function)
