# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
from io import TextIOBase

import genshi.core
import genshi.output
from genshi.template import NewTextTemplate

from zxcss.reporting import ExportLoader


class ExportStream(genshi.core.Stream):
    "Base class for the zxcss streams."

    def render(self, method=None, encoding='utf-8', out=None, **kwargs):
        "calls the serializer to render the template"
        return self.serializer(
            self.events, method=method, encoding=encoding, out=out)

    def serialize(self, method='text', **kwargs):
        "generates the text corresponding to the template"
        return self.render(method, **kwargs)

    def __or__(self, function):
        "Support for the bitwise operator"
        return ExportStream(self.events | function, self.serializer)


class TextSerializer:
    "plain text with trailing blanks stripped from every line"

    def __init__(self):
        self.text_serializer = genshi.output.TextSerializer()

    def __call__(self, stream, method=None, encoding='utf-8', out=None):
        text = ''.join(self.text_serializer(stream))
        text = '\n'.join(line.rstrip() for line in text.split('\n'))
        if out is not None:
            out.write(text if isinstance(out, TextIOBase)
                      else text.encode(encoding or 'utf-8'))
            return None
        if encoding is None:
            return text
        return text.encode(encoding)


class Template(NewTextTemplate):

    def generate(self, *args, **kwargs):
        generated = super(Template, self).generate(*args, **kwargs)
        return ExportStream(generated, TextSerializer())


ExportLoader.add_factory('text', Template)
