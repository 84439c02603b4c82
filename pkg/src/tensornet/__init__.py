"""Dense tensors with flavored wires, tensor networks, MPS compression,
and counting by contraction."""

from .catalog import (
    aklt_projector,
    and_tensor,
    antisymmetrizer,
    cap,
    cnot,
    copy_tensor,
    cup,
    epsilon,
    hadamard,
    identity,
    minus_ket,
    not_tensor,
    or_tensor,
    pauli_x,
    pauli_y,
    pauli_z,
    plus_ket,
    swap,
    toffoli,
    xor_tensor,
)
from .counting import (
    CnfFormula,
    CountResult,
    Graph,
    brute_force_colorings,
    brute_force_sat,
    count_3_edge_colorings,
    count_sat,
    formula_to_network,
    parse_dimacs,
    parse_graph,
)
from .decomp import (
    SchmidtDecomposition,
    SvdResult,
    TrimPolicy,
    dematricize,
    matricize,
    reduced_density,
    renyi_entropy,
    schmidt,
    schmidt_rank,
    svd,
    svd_reconstruct,
    trim,
    von_neumann,
)
from .errors import (
    DegenerateTrimError,
    NonIntegralError,
    ParseError,
    ShapeError,
    SizeLimitError,
    TensorError,
    WireError,
)
from .fileio import parse_amplitudes, read_amplitudes, write_amplitudes
from .mps import (
    MPS,
    CompressionReport,
    aklt_chain,
    amplitude,
    bond_entropy,
    compress,
    ghz_mps,
    inner,
    mps_from_dense,
    schmidt_values,
    to_dense,
    w_mps,
)
from .network import TensorNetwork, concurrence, kempe, three_tangle
from .tensor import (
    LOWER,
    UPPER,
    Flavor,
    Tensor,
    WireSpec,
    allclose,
    bend,
    bra,
    conjugate,
    contract,
    dagger,
    devectorize,
    enumerate_reshapes,
    ket,
    lower_wire,
    matrix,
    permute,
    raise_wire,
    scalar,
    tensor_product,
    trace,
    transpose_map,
    vectorize,
)

__version__ = "0.1.0"
