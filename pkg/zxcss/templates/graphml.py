# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
import genshi.output
import lxml.etree
from genshi.template import NewTextTemplate

from zxcss.reporting import ExportLoader
from zxcss.templates.base import ExportStream

GRAPHML_NS = 'http://graphml.graphdrawing.org/xmlns'
_KEYS = (('kind', 'string'), ('phase', 'int'), ('port', 'string'))


def _tag(name):
    return '{%s}%s' % (GRAPHML_NS, name)


class Template(NewTextTemplate):
    "A GraphML templating object"

    def generate(self, *args, **kwargs):
        generated = super(Template, self).generate(*args, **kwargs)
        return ExportStream(generated, GraphMLSerializer())


class GraphMLSerializer:
    """Reads the ``graph``/``node``/``edge`` lines produced by the template
    and writes the matching GraphML document."""

    def __init__(self):
        self.text_serializer = genshi.output.TextSerializer()

    def __call__(self, stream, method=None, encoding='utf-8', out=None):
        text = genshi.output.encode(self.text_serializer(stream),
                                    encoding=None)
        root = lxml.etree.Element(_tag('graphml'), nsmap={None: GRAPHML_NS})
        for name, kind in _KEYS:
            lxml.etree.SubElement(root, _tag('key'), {
                'id': name, 'for': 'node', 'attr.name': name,
                'attr.type': kind})
        graph = lxml.etree.SubElement(root, _tag('graph'),
                                      edgedefault='undirected')
        for number, line in enumerate(text.splitlines(), 1):
            fields = line.split()
            if not fields:
                continue
            if fields[0] == 'graph':
                graph.set('id', ' '.join(fields[1:]) or 'diagram')
            elif fields[0] == 'node' and len(fields) == 5:
                node = lxml.etree.SubElement(graph, _tag('node'),
                                             id=fields[1])
                for (key, _), value in zip(_KEYS, fields[2:]):
                    if key == 'port' and value == '-':
                        continue
                    data = lxml.etree.SubElement(node, _tag('data'), key=key)
                    data.text = value
            elif fields[0] == 'edge' and len(fields) == 3:
                lxml.etree.SubElement(graph, _tag('edge'), source=fields[1],
                                      target=fields[2])
            else:
                raise ValueError('line %d of the GraphML template is not '
                                 'understood: %r' % (number, line))
        result = lxml.etree.tostring(root, encoding='UTF-8',
                                     xml_declaration=True, pretty_print=True)
        if out is not None:
            out.write(result)
            return None
        if encoding is None:
            return result.decode('utf-8')
        return result


ExportLoader.add_factory('graphml', Template)
