# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
plugins = ['base', 'dot', 'graphml']

for name in plugins:
    __import__('zxcss.templates.%s' % name)
