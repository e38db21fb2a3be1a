from ._errors import (  # noqa
    AmbiguityError,
    FormatError,
    InvalidObjectError,
    PathDiagramError,
    SeriesError,
    StirlingTreesError,
)
from ._version import __version__  # noqa
from .bijections import (  # noqa
    CoarseDiagram,
    Fall,
    Level,
    PathDiagram,
    Rise,
    VariantMap,
    coarsen,
    enum_pathdiagrams,
    enum_port_pathdiagrams,
    flatten_trace,
    insert_block,
    pathdiagram_to_tree,
    perm_to_tree,
    port_pathdiagram_to_tree,
    port_tree_to_pathdiagram,
    refine,
    tree_to_pathdiagram,
    tree_to_perm,
    variant_map,
)
from .core import (  # noqa
    KaryIncreasingTree,
    KStirlingPermutation,
    LocalTypeString,
    PortTree,
    Vacancy,
    ValidityReport,
    count_kary_trees,
    count_port,
    count_stirling,
    validate_kary_tree,
    validate_port,
    validate_stirling,
)
from .enumeration import (  # noqa
    enum_kary_trees,
    enum_ports,
    enum_stirling,
    multiset_oracle,
    random_object,
    random_objects,
)
from .localtypes import (  # noqa
    TypeHistogram,
    classic_name,
    classic_node_name,
    classic_types,
    local_types,
    local_types_of_word,
    node_types,
    ternary_node_name,
    type_histogram,
)
from .series import (  # noqa
    MarkerVariable,
    TruncatedSeries,
    brute_force_type_gf,
    cf_series,
    coefficient,
    expand_words,
    walk_paths,
    words_image,
)
from .stats import (  # noqa
    StatProfile,
    block_profile,
    equidistribution_report,
    lr_profile,
    outdegree_profile,
)
