"""
Export and re-import of computed objects: basis, central element, sigma,
gamma, highest-weight vectors and rewrite systems.

JSON documents carry canonical scalar strings, so loading a document and
exporting it again reproduces the same bytes.
"""

import json
import logging
import os
from typing import Any, Dict, Optional, Tuple

import pandas as pd

from algebra.qlie import QuantumLieAlgebra, make_quantum_lie_algebra
from algebra.reference import SL3_GAMMA_EIGENVALUES, SL3_HIGHEST_WEIGHT
from algebra.rewrite import RewriteSystem, element_from_records, element_to_records, system_from_dict, system_to_dict
from algebra.scalars import as_scalar
from algebra.suites import highest_weight_checks
from algebra.uq import AlgebraElement, QuantumGroup, make_algebra
from algebra.weights import letter_from_str, letter_to_str
from config.constants import EXPORT_TARGETS, SCHEMA_VERSION

logger = logging.getLogger(__name__)


def _element_records(element: AlgebraElement):
    algebra = element.algebra
    words = sorted(element.terms, key=algebra.word_key, reverse=True)
    return [{'word': [letter_to_str(x) for x in w], 'coeff': element.terms[w].to_string()} for w in words]


def _pair_map_records(qla: QuantumLieAlgebra, matrix) -> list:
    names = qla.names
    records = []
    for (i, j) in qla.pairs():
        image = [
            {'pair': [names[k], names[l]], 'coeff': c.to_string()}
            for (k, l), c in sorted(matrix[(i, j)].items())
        ]
        records.append({'x': names[i], 'y': names[j], 'image': image})
    return records


def _highest_weight_records(document: Dict[str, Any], vectors) -> None:
    document['vectors'] = {
        label: [{'pair': list(pair), 'coeff': c.to_string()} for pair, c in tensor.items()]
        for label, tensor in vectors.items()
    }
    document['gamma_eigenvalues'] = {label: SL3_GAMMA_EIGENVALUES[label].to_string() for label in vectors}


class ArtifactSerializer:
    """Build, write and read exportable objects for U_q(sl n)."""

    def __init__(self, n: int, step_budget: Optional[int] = None):
        self.n = n
        self.step_budget = step_budget
        self.algebra: QuantumGroup = make_algebra(n, step_budget)
        self._qla = None

    @property
    def qla(self) -> QuantumLieAlgebra:
        if self._qla is None:
            self._qla = make_quantum_lie_algebra(self.n, self.step_budget)
        return self._qla

    # ------------------------------------------------------------------
    # documents
    # ------------------------------------------------------------------
    def document(self, target: str) -> Dict[str, Any]:
        """
        JSON-ready document for an export target.

        Raises:
            ValueError: for an unknown target, or highest-weights with n != 3
        """
        if target not in EXPORT_TARGETS:
            raise ValueError(f"unknown export target {target}")
        document: Dict[str, Any] = {'schema_version': SCHEMA_VERSION, 'n': self.n, 'what': target}
        if target == 'rules':
            document['system'] = system_to_dict(self.algebra.rules, letter_to_str)
            return document
        qla = self.qla
        if target == 'basis':
            document['weight'] = list(qla.weight.coords)
            document['names'] = list(qla.names)
            document['elements'] = {name: _element_records(x) for name, x in zip(qla.names, qla.basis)}
        elif target == 'central-element':
            document['weight'] = list(qla.weight.coords)
            document['element'] = _element_records(qla.C)
        elif target in ('sigma', 'gamma'):
            document['basis'] = list(qla.names)
            document['entries'] = _pair_map_records(qla, qla.sigma if target == 'sigma' else qla.gamma)
        elif target == 'highest-weights':
            if self.n != 3:
                raise ValueError("highest-weight vectors are tabulated for n = 3 only")
            verified = {}
            for check in highest_weight_checks(qla):
                if check.holds:
                    verified[check.label] = SL3_HIGHEST_WEIGHT[check.label]
                else:
                    logger.warning("%s failed its weight, E-annihilation or gamma check; not exported", check.label)
            _highest_weight_records(document, verified)
        return document

    def frame(self, target: str) -> pd.DataFrame:
        """Flat table view of a document for CSV and text output."""
        document = self.document(target)
        rows = []
        if target == 'basis':
            for name, records in document['elements'].items():
                rows += [{'name': name, 'word': ' '.join(r['word']), 'coeff': r['coeff']} for r in records]
        elif target == 'central-element':
            rows = [{'word': ' '.join(r['word']), 'coeff': r['coeff']} for r in document['element']]
        elif target in ('sigma', 'gamma'):
            for entry in document['entries']:
                for term in entry['image']:
                    rows.append({'x': entry['x'], 'y': entry['y'], 'left': term['pair'][0],
                                 'right': term['pair'][1], 'coeff': term['coeff']})
        elif target == 'highest-weights':
            for label, terms in document['vectors'].items():
                rows += [{'vector': label, 'left': t['pair'][0], 'right': t['pair'][1], 'coeff': t['coeff']}
                         for t in terms]
        elif target == 'rules':
            for rule in document['system']['rules']:
                rhs = ' + '.join(f"({r['coeff']})*{'.'.join(r['word']) or '1'}" for r in rule['rhs'])
                rows.append({'name': rule['name'], 'lhs': '.'.join(rule['lhs']), 'rhs': rhs})
        return pd.DataFrame(rows)

    def render(self, target: str, fmt: str) -> str:
        if fmt == 'json':
            return json.dumps(self.document(target), indent=2, ensure_ascii=False) + "\n"
        frame = self.frame(target)
        if fmt == 'csv':
            return frame.to_csv(index=False, lineterminator='\n')
        return frame.to_string(index=False) + "\n"

    def export(self, target: str, fmt: str, path: str) -> Tuple[bool, str]:
        """
        Write one export target to ``path``.

        Returns:
            Tuple of (success: bool, message: str)
        """
        try:
            text = self.render(target, fmt)
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(path, 'w', encoding='utf-8') as f:
                f.write(text)
            logger.info("exported %s for sl(%d) to %s", target, self.n, path)
            return True, f"Exported {target} to {path}"
        except (OSError, ValueError) as e:
            return False, f"Error exporting {target}: {str(e)}"

    # ------------------------------------------------------------------
    # loading
    # ------------------------------------------------------------------
    def _element(self, records) -> AlgebraElement:
        free = element_from_records(records, self.algebra.decode_letter)
        return self.algebra.element(dict(free.terms))

    def load(self, document: Dict[str, Any]):
        """
        Rebuild the object described by a JSON document.

        Returns:
            basis -> {name: AlgebraElement}; central-element -> AlgebraElement;
            sigma/gamma -> {(x, y): {(left, right): Scalar}};
            highest-weights -> {label: {(left, right): Scalar}}; rules -> RewriteSystem
        """
        target = document.get('what')
        if document.get('n') != self.n:
            raise ValueError(f"document is for n = {document.get('n')}, expected {self.n}")
        if target == 'basis':
            return {name: self._element(records) for name, records in document['elements'].items()}
        if target == 'central-element':
            return self._element(document['element'])
        if target in ('sigma', 'gamma'):
            return {
                (entry['x'], entry['y']): {tuple(t['pair']): as_scalar(t['coeff']) for t in entry['image']}
                for entry in document['entries']
            }
        if target == 'highest-weights':
            return {
                label: {tuple(t['pair']): as_scalar(t['coeff']) for t in terms}
                for label, terms in document['vectors'].items()
            }
        if target == 'rules':
            return system_from_dict(document['system'], self.algebra.decode_letter,
                                    self.algebra.order, self.algebra.rules.families)
        raise ValueError(f"unknown document target {target}")

    def reexport(self, loaded, target: str) -> Dict[str, Any]:
        """Document for an object returned by ``load``."""
        document: Dict[str, Any] = {'schema_version': SCHEMA_VERSION, 'n': self.n, 'what': target}
        if target == 'basis':
            document['weight'] = list(self.qla.weight.coords)
            document['names'] = list(loaded)
            document['elements'] = {name: _element_records(x) for name, x in loaded.items()}
        elif target == 'central-element':
            document['weight'] = list(self.qla.weight.coords)
            document['element'] = _element_records(loaded)
        elif target in ('sigma', 'gamma'):
            names = self.qla.names
            document['basis'] = list(names)
            document['entries'] = [
                {'x': x, 'y': y, 'image': [
                    {'pair': list(pair), 'coeff': c.to_string()}
                    for pair, c in sorted(image.items(), key=lambda pc: (names.index(pc[0][0]), names.index(pc[0][1])))
                ]}
                for (x, y), image in loaded.items()
            ]
        elif target == 'highest-weights':
            _highest_weight_records(document, loaded)
        elif target == 'rules':
            document['system'] = system_to_dict(loaded, letter_to_str)
        return document


def load_rule_file(path: str) -> RewriteSystem:
    """
    Read a rule set for the confluence checker.

    Plain documents list their alphabet and letters are kept as strings;
    exported algebra rule sets (with ``n``) are decoded against U_q(sl n).
    """
    with open(path, 'r', encoding='utf-8') as f:
        document = json.load(f)
    system = document.get('system', document)
    if system.get('alphabet'):
        return system_from_dict(system)
    if 'n' not in document:
        raise ValueError(f"{path}: rule document has neither an alphabet nor n")
    algebra = make_algebra(int(document['n']))
    return system_from_dict(system, algebra.decode_letter, algebra.order, algebra.rules.families)
