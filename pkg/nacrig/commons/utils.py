# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import re

import plotly


def plotly_rgb_to_hex(rgb_colors):
    """
    Convert a list of RGB strings in the format used by plotly ("rgb(<R>,<G>,<B>") to a list of hexadecimal codes.
    :param rgb_colors: List of RGB integer strings in the format ["rgb(255,0,0)", "rgb(0,255,0)", ...]
    :return: List of corresponding hex code strings ["#ff0000", "#00ff00", ...]
    """
    color_codes = plotly_rgb_values(rgb_colors)
    return ['#{:02x}{:02x}{:02x}'.format(*cc) for cc in color_codes]


def plotly_rgb_values(rgb_colors):
    rgb_values = []
    for color in rgb_colors:
        vals = re.findall(r"rgb\(([0-9]+),\s?([0-9]+),\s?([0-9]+)\)", color)[0]
        rgb_values.append([int(val) for val in vals])
    return rgb_values


default_colors = plotly_rgb_to_hex(plotly.colors.DEFAULT_PLOTLY_COLORS)

# Stroke colours of the two edge classes and of the vertices.
blue_color = default_colors[0]
red_color = default_colors[3]
vertex_color = default_colors[7]
