# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import setuptools


setuptools.setup(
    name="nac-rigidity",
    version="0.1.0",
    license="MIT License",
    description="NAC-colorings and flexible labelings of graphs",
    packages=setuptools.find_packages(exclude=['test', 'test.*']),
    package_data={'nacrig': ['config/defaults.yaml']},
    python_requires='>=3.7',
    install_requires=[
        'pyyaml',
        'networkx>=2.5',
        'numpy',
        'plotly',
        'tqdm',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['nacrig=nacrig.cli:main'],
    },
)
