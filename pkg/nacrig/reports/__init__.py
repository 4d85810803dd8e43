# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from .analysis import AnalysisReport, analyze, nac_listing, EXISTS, \
    NONE_EXISTS, UNKNOWN
