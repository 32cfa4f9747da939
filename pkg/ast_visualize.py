#!/usr/bin/python3
import dataclasses
import itertools
import numbers
import optparse
import re
import sys

import graphviz as gv

from classes.order_term import OrderTerm
from classes.parser import parse, render


def main(args):
    parser = optparse.OptionParser(usage="ast_visualize.py [options] [expression]")
    parser.add_option("-f", "--file", action="store",
                      help="Read an expression from the specified file")
    parser.add_option("-l", "--label", action="store",
                      help="The label for the visualization")
    parser.add_option("-o", "--output", action="store", default="term.gv",
                      help="Where to write the graphviz source")

    options, args = parser.parse_args(args)
    if options.file:
        with open(options.file) as instream:
            text = instream.read().strip()
    elif len(args) == 2:
        text = args[1]
    else:
        print("Expecting an expression on stdin...")
        text = sys.stdin.read().strip()

    term = parse(text)
    graph = draw(term, options.output, label=options.label or render(term))
    print(f'Wrote {options.output}')
    return graph


def transform_term(term):
    if isinstance(term, OrderTerm):
        node = {to_snake_case(field.name): transform_term(getattr(term, field.name))
                for field in dataclasses.fields(term)}
        node['node_type'] = to_snake_case(term.__class__.__name__)
        return node
    elif isinstance(term, (tuple, list)):
        return [transform_term(el) for el in term]
    elif isinstance(term, numbers.Number) or term is None:
        return term
    else:
        return str(term)


def to_snake_case(string):
    return re.sub('([a-z0-9])([A-Z])', r'\1_\2', string).lower()


class TermGraph:
    """
    Draws a transformed term as a graphviz tree. Scalar fields are folded into the label
    of their node; nested nodes and part lists become children reached by a labelled edge
    """

    style = {
        'graph': {'labelloc': 't', 'fontcolor': 'white', 'bgcolor': '#333333', 'margin': '0'},
        'node': {'color': 'white', 'fontcolor': 'white', 'style': 'filled', 'fillcolor': '#006699'},
        'edge': {'color': 'white', 'fontcolor': 'white'},
    }
    leaf_shape = 'box'

    def __init__(self, label=None):
        graph_attr = dict(self.style['graph'])
        if label is not None:
            graph_attr['label'] = escape(label)
        self.graph = gv.Digraph(graph_attr=graph_attr, node_attr=self.style['node'], edge_attr=self.style['edge'])
        self._ids = itertools.count()

    def add(self, node):
        """
        :return: id of the graphviz node drawn for node
        """
        node_id = f'n{next(self._ids)}'
        if isinstance(node, list):
            self.graph.node(node_id, label='[parts]')
            children = [(str(position), child) for position, child in enumerate(node)]
        elif isinstance(node, dict):
            scalars = [f'{key}: {escape(str(value))}' for key, value in node.items()
                       if key != 'node_type' and not isinstance(value, (dict, list))]
            children = [(key, value) for key, value in node.items() if isinstance(value, (dict, list))]
            shape = self.leaf_shape if not children else None
            self.graph.node(node_id, label='\\n'.join([node.get('node_type', '?'), *scalars]), shape=shape)
        else:
            self.graph.node(node_id, label=escape(str(node)), shape=self.leaf_shape)
            children = []

        for edge_label, child in children:
            self.graph.edge(node_id, self.add(child), label=edge_label)
        return node_id


def escape(text):
    return text.replace('\\', '\\\\')


def draw(term, output, *, label=None):
    """
    Writes the graphviz source of the term tree to output
    :return: the graphviz.Digraph
    """
    tree = TermGraph(label)
    tree.add(transform_term(term))
    tree.graph.save(output)
    return tree.graph


if __name__ == '__main__':
    main(sys.argv)
