from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from dfs.errors import UnknownPresetError
from dfs.pauli.element import parse_pauli
from dfs.subgroup.closure import PauliSubgroup, closure


@dataclass(frozen=True)
class Preset:
    name: str
    generators: Tuple[str, ...]
    description: str
    # state used by the channel demonstration: one that leaves every DFS
    cross_irrep_state: Optional[str] = None


PRESETS: Dict[str, Preset] = {
    p.name: p
    for p in (
        Preset(
            "qz",
            ("ZI", "IZ"),
            "independent dephasing on two qubits; four 1-D DFSs, the basis states",
            "0.7071067811865476|00> + 0.7071067811865476|11>",
        ),
        Preset(
            "qx",
            ("XXII", "IIXX"),
            "bit flips on qubit pairs; four characters of multiplicity 4",
            "0.7071067811865476|0000> + 0.7071067811865476|1100>",
        ),
        Preset(
            "q4",
            ("XXXX", "YYYY"),
            "global X, Y and Z on four qubits; four characters of multiplicity 4",
            "|0000>",
        ),
        Preset(
            "q2z",
            ("ZZII", "ZIZI", "ZIIZ", "IZZI", "IZIZ", "IIZZ"),
            "pairwise ZZ errors; the DFS span{|0000>, |1111>} encodes one qubit",
            "0.7071067811865476|0000> + 0.7071067811865476|0011>",
        ),
        Preset(
            "q8",
            ("XXI", "IZZ"),
            "non-Abelian Q8; no 1-D DFS, four copies of one 2-D irrep",
        ),
    )
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise UnknownPresetError(name, sorted(PRESETS)) from None


def preset_subgroup(name: str) -> PauliSubgroup:
    preset = get_preset(name)
    return closure([parse_pauli(text) for text in preset.generators])
