"""
Arc diagrams for catch representations
Static SVG 1.1 text and an interactive Plotly polar figure
"""

import logging
import os

import numpy as np
import plotly.graph_objects as go

from config.settings import (
    ARC_COLORS,
    SVG_ARC_GAP,
    SVG_CIRCLE_RADIUS,
    SVG_FONT_SIZE,
    SVG_POINT_RADIUS,
    SVG_SIZE,
)
from utils.helpers import create_output_directory

logger = logging.getLogger(__name__)


class ArcDiagramGenerator:
    """
    Draw a representation on a circle: position x sits at angle 2*pi*x/L,
    clockwise from 12 o'clock. Arcs are stacked outside the circle at
    increasing radii in order of their start position.
    """

    @staticmethod
    def _labels(rep, labels):
        return list(labels) if labels is not None else [f"v{v + 1}" for v in range(rep.n)]

    @staticmethod
    def _ranked(rep):
        return sorted(range(rep.n), key=lambda v: (rep.arcs[v].a.value, v))

    def _xy(self, theta, radius):
        center = SVG_SIZE / 2
        return center + radius * np.sin(theta), center - radius * np.cos(theta)

    def render_svg(self, rep, labels=None):
        """
        SVG document for a representation.

        Parameters:
        rep (CatchRepresentation): Representation to draw
        labels (list): Vertex names, default v1..vn

        Returns:
        str: SVG text
        """
        names = self._labels(rep, labels)
        L = float(rep.circumference)
        center = SVG_SIZE / 2
        room = center - SVG_CIRCLE_RADIUS - 2 * SVG_FONT_SIZE
        gap = min(SVG_ARC_GAP, room / max(rep.n, 1))

        parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_SIZE}" '
            f'height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
            f'<circle cx="{center}" cy="{center}" r="{SVG_CIRCLE_RADIUS}" fill="none" stroke="#999"/>',
        ]

        for rank, v in enumerate(self._ranked(rep)):
            arc = rep.arcs[v]
            color = ARC_COLORS[rank % len(ARC_COLORS)]
            radius = SVG_CIRCLE_RADIUS + (rank + 1) * gap
            start = 2 * np.pi * float(arc.a.value) / L
            sweep = 2 * np.pi * float(arc.length) / L
            x1, y1 = self._xy(start, radius)
            if sweep == 0:
                parts.append(f'<circle cx="{x1:.2f}" cy="{y1:.2f}" r="2" fill="{color}"/>')
            else:
                x2, y2 = self._xy(start + sweep, radius)
                large = 1 if sweep > np.pi else 0
                parts.append(
                    f'<path d="M {x1:.2f} {y1:.2f} A {radius:.2f} {radius:.2f} 0 {large} 1 '
                    f'{x2:.2f} {y2:.2f}" fill="none" stroke="{color}" stroke-width="2"/>'
                )
            tx, ty = self._xy(start + sweep / 2, radius + SVG_FONT_SIZE / 2)
            parts.append(
                f'<text x="{tx:.2f}" y="{ty:.2f}" font-size="{SVG_FONT_SIZE}" fill="{color}" '
                f'text-anchor="middle">{names[v]}</text>'
            )

        for v, p in enumerate(rep.points):
            theta = 2 * np.pi * float(p.value) / L
            px, py = self._xy(theta, SVG_CIRCLE_RADIUS)
            lx, ly = self._xy(theta, SVG_CIRCLE_RADIUS - 2 * SVG_FONT_SIZE)
            parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="{SVG_POINT_RADIUS}" fill="black"/>')
            parts.append(
                f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="{SVG_FONT_SIZE}" '
                f'text-anchor="middle">p{names[v]}</text>'
            )

        parts.append('</svg>')
        return "\n".join(parts) + "\n"

    def save_svg(self, rep, path, labels=None):
        directory = os.path.dirname(path)
        if directory:
            create_output_directory(directory)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.render_svg(rep, labels))
        logger.info("wrote %s", path)
        return path

    def create_interactive_figure(self, rep, labels=None, title="Catch representation"):
        """
        Plotly polar figure of a representation.

        Returns:
        plotly.graph_objects.Figure: One trace per arc plus the points
        """
        names = self._labels(rep, labels)
        L = float(rep.circumference)
        fig = go.Figure()

        for rank, v in enumerate(self._ranked(rep)):
            arc = rep.arcs[v]
            start = 360 * float(arc.a.value) / L
            sweep = 360 * float(arc.length) / L
            theta = np.linspace(start, start + sweep, max(2, int(sweep) + 2))
            fig.add_trace(go.Scatterpolar(
                r=np.full(theta.shape, 1.0 + 0.1 * (rank + 1)),
                theta=theta,
                mode='lines',
                line={'color': ARC_COLORS[rank % len(ARC_COLORS)], 'width': 3},
                name=names[v],
                hovertemplate=(f"{names[v]}: [{float(arc.a.value):.4f}, {float(arc.b.value):.4f}]"
                               "<extra></extra>"),
            ))

        fig.add_trace(go.Scatterpolar(
            r=[1.0] * rep.n,
            theta=[360 * float(p.value) / L for p in rep.points],
            mode='markers+text',
            marker={'color': 'black', 'size': 8},
            text=[f"p{name}" for name in names],
            textposition='bottom center',
            name='points',
        ))

        fig.update_layout(
            title={'text': f'{title}<br><sub>circumference {L:g}</sub>', 'x': 0.5, 'font': {'size': 16}},
            polar={
                'angularaxis': {'rotation': 90, 'direction': 'clockwise', 'showticklabels': False},
                'radialaxis': {'visible': False, 'range': [0, 1.2 + 0.1 * rep.n]},
            },
            showlegend=True,
            width=700,
            height=700,
        )
        return fig
