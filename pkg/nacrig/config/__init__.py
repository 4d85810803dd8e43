# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
YAML configuration of nacrig.

Defaults are read from `defaults.yaml` next to this file. A user file only
needs to contain the keys it overrides, it is merged recursively on top of
the defaults. Components are described by a `_name` key and instantiated by
`init_component`.
"""
import collections.abc
import logging
import os
from copy import deepcopy
from os import path

import yaml

logger = logging.getLogger(__name__)

DEFAULTS_PATH = path.join(path.dirname(__file__), 'defaults.yaml')
THREADS_ENV = 'NACRIG_THREADS'

_active_config = None


def get_component_by_name(name):
    # Imported here, the motions package reads the configuration itself.
    from nacrig.motions.construction import GridConstruction, \
        ZigzagConstruction, SpatialConstruction

    if name == 'grid':
        return GridConstruction
    if name == 'zigzag':
        return ZigzagConstruction
    if name == '3d':
        return SpatialConstruction

    raise NotImplementedError(name)


def load_yaml(filename):
    with open(filename, "r") as f:
        return yaml.load(f, Loader=yaml.FullLoader)


def recursive_update(d, u):
    """
    Given two dictionaries d and u, update dict d recursively.

    E.g.:
    d = {'a': {'b' : 1}}
    u = {'c': 2, 'a': {'d': 3}}
    => {'a': {'b': 1, 'd': 3}, 'c': 2}
    """
    for k, v in u.items():
        if isinstance(v, collections.abc.Mapping):
            r = recursive_update(d.get(k) or {}, v)
            d[k] = r
        else:
            d[k] = u[k]
    return d


def load_component_default_config(component_config, all_default_configs):
    """
    Returns the defaults of a `_name` component merged with its own keys.
    """
    if '_name' not in component_config:
        return deepcopy(component_config)
    default = deepcopy(all_default_configs.get(component_config['_name'])
                       or {})
    recursive_update(default, component_config)
    return default


def get_config(filename=None, overrides=None):
    """
    Builds a configuration dict.

    :param filename: Optional YAML file overriding the defaults.
    :param overrides: Optional dict applied last.
    :return: The merged configuration.
    """
    config = load_yaml(DEFAULTS_PATH)
    if filename is not None:
        user_config = load_yaml(filename) or {}
        if not isinstance(user_config, dict):
            raise ValueError(f'Configuration file {filename} must contain a '
                             f'mapping, got {type(user_config).__name__}')
        logger.info('Loading configuration overrides from {}'
                    .format(filename))
        recursive_update(config, user_config)
    if overrides:
        recursive_update(config, overrides)
    return config


def set_config(config):
    global _active_config
    _active_config = config


def active_config():
    global _active_config
    if _active_config is None:
        _active_config = get_config()
    return _active_config


def get_setting(section, key):
    return active_config()[section][key]


def get_n_threads():
    threads = active_config()['nac'].get('threads')
    if threads is None:
        threads = os.environ.get(THREADS_ENV, 1)
    try:
        threads = int(threads)
    except ValueError:
        logger.warning('Ignoring invalid {}={!r}'.format(THREADS_ENV, threads))
        return 1
    return max(1, threads)


def init_component(_context=None, **kwargs):
    """
    Recursively instantiates every `_name` component found in kwargs.
    `_context` holds the runtime arguments passed to each component.
    """
    if _context is None:
        _context = {}
    for k, v in kwargs.items():
        if isinstance(v, dict):
            v = init_component(_context=_context, **v)
        kwargs[k] = v
    if '_name' in kwargs:
        comp_class = get_component_by_name(kwargs.pop('_name'))
        return comp_class(**_context, **kwargs)
    else:
        return kwargs


def build_component(component_config, **context):
    """
    Instantiates a single component, filling in its section defaults.
    """
    config = load_component_default_config(component_config, active_config())
    return init_component(_context=context, **config)
