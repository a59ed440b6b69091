"""
语料生成 - 穷举与随机的 (结构, 双团队, 公式) 实例
"""

import itertools
import logging
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from logic.errors import HarnessError, InfeasibleCorpusError
from logic.gq import canonical_domain, subsets
from logic.models import (
    Assignment, DoubleTeam, Element, Equality, Formula, GAtom, Not, Or, Quant, RelAtom,
    Relation, Structure, Team, VarName
)
from logic.registry import QuantifierRegistry
from logic.syntax import renumber

from .models import CorpusSpec, Instance

logger = logging.getLogger(__name__)

Scope = FrozenSet[VarName]


# =============================================================================
# 结构与团队
# =============================================================================

def enumerate_structures(vocab: Mapping[str, int], size: int) -> Iterator[Structure]:
    """规范论域 {0..size-1} 上词汇表的全部结构"""
    domain = canonical_domain(size)
    names = sorted(vocab)
    pools = [list(subsets(list(itertools.product(domain, repeat=vocab[name])))) for name in names]
    for choice in itertools.product(*pools):
        yield Structure(domain, {name: Relation(vocab[name], rows) for name, rows in zip(names, choice)})


def count_structures(vocab: Mapping[str, int], size: int) -> int:
    total = 1
    for arity in vocab.values():
        total *= 2 ** (size ** arity)
    return total


def all_assignments(variables: Sequence[VarName], domain: Sequence[Element]) -> List[Assignment]:
    names = sorted(variables)
    return [Assignment.of(dict(zip(names, values))) for values in itertools.product(domain, repeat=len(names))]


def enumerate_teams(variables: Sequence[VarName], domain: Sequence[Element], max_size: int) -> List[Team]:
    """大小不超过 max_size 的全部团队"""
    assignments = all_assignments(variables, domain)
    teams = []
    for k in range(min(max_size, len(assignments)) + 1):
        teams.extend(Team(frozenset(variables), frozenset(combo))
                     for combo in itertools.combinations(assignments, k))
    return teams


def count_teams(n_vars: int, size: int, max_size: int) -> int:
    n_assignments = size ** n_vars
    return sum(comb(n_assignments, k) for k in range(min(max_size, n_assignments) + 1))


def enumerate_double_teams(variables: Sequence[VarName], domain: Sequence[Element],
                           max_size: int) -> Iterator[DoubleTeam]:
    teams = enumerate_teams(variables, domain, max_size)
    for U, V in itertools.product(teams, teams):
        yield DoubleTeam(U, V)


def count_double_teams(n_vars: int, size: int, max_size: int) -> int:
    return count_teams(n_vars, size, max_size) ** 2


def instance_rng(seed: int, index: int) -> np.random.Generator:
    """按 (种子, 实例编号) 派生的计数器型生成器，与并发顺序无关"""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))


# =============================================================================
# 公式
# =============================================================================

class FormulaSpace:
    """有界深度的公式空间；原子只用作用域内变量，量词约束变量池中的变量"""

    def __init__(self, spec: CorpusSpec, registry: QuantifierRegistry):
        self.spec = spec
        self.registry = registry
        self._atoms: Dict[Scope, Tuple[Formula, ...]] = {}
        self._formulas: Dict[Tuple[int, Scope], Tuple[Formula, ...]] = {}
        self._counts: Dict[Tuple[int, Scope], int] = {}

    def atoms(self, scope: Scope) -> Tuple[Formula, ...]:
        if scope not in self._atoms:
            names = sorted(scope)
            result: List[Formula] = [Equality(y1=a, y2=b) for a in names for b in names]
            for rel in sorted(self.spec.vocab):
                result.extend(RelAtom(rel=rel, args=args)
                              for args in itertools.product(names, repeat=self.spec.vocab[rel]))
            for aname in self.spec.atoms:
                atom = self.registry.atom(aname)
                slots = [list(itertools.product(names, repeat=k)) for k in atom.pos_type + atom.neg_type]
                n = len(atom.pos_type)
                result.extend(GAtom(aname=aname, pos_args=combo[:n], neg_args=combo[n:])
                              for combo in itertools.product(*slots))
            self._atoms[scope] = tuple(result)
        return self._atoms[scope]

    def _binders(self, qname: str) -> List[Tuple[Tuple[VarName, ...], ...]]:
        quantifier = self.registry.quantifier(qname)
        pools = [list(itertools.product(self.spec.var_pool, repeat=i)) for i in quantifier.type_sig]
        return list(itertools.product(*pools))

    def formulas(self, depth: int, scope: Scope) -> Tuple[Formula, ...]:
        """深度不超过 depth 的全部公式（节点编号未分配）"""
        key = (depth, scope)
        if key in self._formulas:
            return self._formulas[key]
        result = list(self.atoms(scope))
        if depth > 0:
            prev = self.formulas(depth - 1, scope)
            result.extend(Not(sub=phi) for phi in prev)
            result.extend(Or(left=a, right=b) for a in prev for b in prev)
            for qname in self.spec.quantifiers:
                for tuples in self._binders(qname):
                    pools = [self.formulas(depth - 1, scope | frozenset(xs)) for xs in tuples]
                    result.extend(Quant(qname=qname, tuples=tuples, subs=subs)
                                  for subs in itertools.product(*pools))
        self._formulas[key] = tuple(result)
        return self._formulas[key]

    def count(self, depth: int, scope: Scope) -> int:
        """formulas(depth, scope) 的大小，不实际生成"""
        key = (depth, scope)
        if key in self._counts:
            return self._counts[key]
        total = len(self.atoms(scope))
        if depth > 0:
            prev = self.count(depth - 1, scope)
            total += prev + prev * prev
            for qname in self.spec.quantifiers:
                for tuples in self._binders(qname):
                    product = 1
                    for xs in tuples:
                        product *= self.count(depth - 1, scope | frozenset(xs))
                    total += product
        self._counts[key] = total
        return total

    def random(self, rng: np.random.Generator, depth: int, scope: Scope) -> Formula:
        """随机公式，深度不超过 depth"""
        atoms = self.atoms(scope)
        if depth == 0 or (atoms and rng.random() < 0.3):
            if not atoms:
                raise HarnessError(f"作用域 {sorted(scope)} 上没有原子公式")
            return atoms[int(rng.integers(len(atoms)))]
        kind = int(rng.integers(3)) if atoms else 2
        if kind == 0:
            return Not(sub=self.random(rng, depth - 1, scope))
        if kind == 1:
            return Or(left=self.random(rng, depth - 1, scope), right=self.random(rng, depth - 1, scope))
        if not self.spec.var_pool:
            raise HarnessError("变量池为空，无法生成量词公式")
        qname = self.spec.quantifiers[int(rng.integers(len(self.spec.quantifiers)))]
        quantifier = self.registry.quantifier(qname)
        tuples = tuple(
            tuple(self.spec.var_pool[int(rng.integers(len(self.spec.var_pool)))] for _ in range(i))
            for i in quantifier.type_sig
        )
        subs = tuple(self.random(rng, depth - 1, scope | frozenset(xs)) for xs in tuples)
        return Quant(qname=qname, tuples=tuples, subs=subs)


# =============================================================================
# 语料
# =============================================================================

class Corpus:
    """按配置生成实例流：论域大小 → 结构 → 双团队 → 公式"""

    def __init__(self, spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None):
        self.spec = spec
        self.registry = registry if registry is not None else QuantifierRegistry()
        self.space = FormulaSpace(spec, self.registry)
        self.scope: Scope = frozenset(spec.team_vars)

    @property
    def sizes(self) -> range:
        return range(self.spec.min_domain, self.spec.max_domain + 1)

    def counts(self) -> Dict[str, int]:
        """穷举模式下的闭式计数"""
        spec = self.spec
        structures = sum(count_structures(spec.vocab, n) for n in self.sizes)
        pairs = sum(count_structures(spec.vocab, n) * count_double_teams(len(spec.team_vars), n, spec.max_team_size)
                    for n in self.sizes)
        formulas = self.space.count(spec.formula_depth, self.scope)
        return {
            "structures": structures,
            "doubleTeams": sum(count_double_teams(len(spec.team_vars), n, spec.max_team_size) for n in self.sizes),
            "formulas": formulas,
            "expectedInstances": pairs * formulas,
        }

    def check_feasible(self) -> Dict[str, int]:
        spec = self.spec
        if spec.max_domain > spec.eval_max_domain:
            raise InfeasibleCorpusError(
                f"maxDomain {spec.max_domain} 超出求值器的论域上限 {spec.eval_max_domain}")
        if not spec.exhaustive:
            return {"samples": spec.sample_count}
        counts = self.counts()
        if counts["expectedInstances"] > spec.max_instances:
            raise InfeasibleCorpusError(
                f"穷举实例数 {counts['expectedInstances']} 超出上限 {spec.max_instances}")
        return counts

    def instances(self) -> Iterator[Instance]:
        if self.spec.exhaustive:
            return self._exhaustive()
        return self._sampled()

    def _exhaustive(self) -> Iterator[Instance]:
        spec = self.spec
        formulas = [renumber(phi) for phi in self.space.formulas(spec.formula_depth, self.scope)]
        logger.info("穷举模式: %d 个公式", len(formulas))
        index = 0
        for n in self.sizes:
            domain = canonical_domain(n)
            double_teams = list(enumerate_double_teams(spec.team_vars, domain, spec.max_team_size))
            for structure in enumerate_structures(spec.vocab, n):
                for dt in double_teams:
                    for phi in formulas:
                        yield Instance(index, structure, dt, phi)
                        index += 1

    def _sampled(self) -> Iterator[Instance]:
        for index in range(self.spec.sample_count):
            yield self.sample(index)

    def sample(self, index: int) -> Instance:
        """第 index 个随机实例，只依赖种子与编号"""
        spec = self.spec
        rng = instance_rng(spec.seed, index)
        n = int(rng.integers(spec.min_domain, spec.max_domain + 1))
        domain = canonical_domain(n)
        relations = {}
        for name in sorted(spec.vocab):
            arity = spec.vocab[name]
            rows = [row for row in itertools.product(domain, repeat=arity) if rng.random() < 0.5]
            relations[name] = Relation(arity, frozenset(rows))
        structure = Structure(domain, relations)
        assignments = all_assignments(spec.team_vars, domain)

        def random_team() -> Team:
            k = int(rng.integers(min(spec.max_team_size, len(assignments)) + 1))
            picked = rng.choice(len(assignments), size=k, replace=False)
            return Team(frozenset(spec.team_vars), frozenset(assignments[int(i)] for i in picked))

        U = random_team()
        V = random_team()
        phi = renumber(self.space.random(rng, spec.formula_depth, self.scope))
        return Instance(index, structure, DoubleTeam(U, V), phi)


def enumerate_instances(spec: CorpusSpec, registry: Optional[QuantifierRegistry] = None) -> Iterator[Instance]:
    """按配置生成实例；穷举规模超出硬上限时抛出 InfeasibleCorpusError"""
    corpus = Corpus(spec, registry)
    corpus.check_feasible()
    return corpus.instances()
