from pydantic import BaseModel, ConfigDict, InstanceOf, field_serializer, model_validator
from typing import Any, List, Optional, Tuple

from .automaton.graph import PathAutomaton
from .cantor.clopen import Clopen
from .cantor.words import UPWord
from .ordinals import Cardinal, RankValue


def _words(points) -> str:
    return ", ".join(str(p) for p in points) if points else "-"


class EngineModel(BaseModel):
    """Immutable record holding engine values (ordinals, words, automata)"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_serializer("*", when_used="json", check_fields=False)
    def _engine_values(self, value: Any):
        return _jsonable(value)

    def lines(self) -> List[str]:
        return [f"{k}: {v}" for k, v in self.model_dump(mode="json").items()]


def _jsonable(value: Any):
    if isinstance(value, PathAutomaton):
        return {"states": len(value.states), "root": value.root}
    if isinstance(value, (RankValue, Cardinal, UPWord, Clopen)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    return value


# ===== Engine results =====
class DerivativeReport(EngineModel):
    chain: Tuple[PathAutomaton, ...]
    rank: InstanceOf[RankValue]
    degree: Optional[int] = None
    top_points: Optional[Tuple[InstanceOf[UPWord], ...]] = None

    @model_validator(mode="after")
    def _check(self):
        if self.rank.is_ordinal:
            if not self.degree or self.top_points is None or len(self.top_points) != self.degree:
                raise ValueError("ordinal rank needs degree >= 1 and matching top points")
        elif self.degree is not None or self.top_points is not None:
            raise ValueError("degree and top points exist only for ordinal ranks")
        return self

    @property
    def kernel(self) -> PathAutomaton:
        return self.chain[-1]

    def lines(self) -> List[str]:
        out = [f"rank: {self.rank}"]
        if self.rank.is_ordinal:
            out += [f"degree: {self.degree}", f"top: {_words(self.top_points)}"]
        elif self.rank.is_infinity:
            n = len(self.kernel.states)
            out.append(f"kernel: {n} state{'s' if n != 1 else ''}")
        return out


class Profile(EngineModel):
    rank: InstanceOf[RankValue]
    degree: Optional[int] = None
    top_points: Optional[Tuple[InstanceOf[UPWord], ...]] = None
    espec: InstanceOf[Cardinal]

    @model_validator(mode="after")
    def _check(self):
        if self.rank.is_ordinal:
            if not self.degree or self.top_points is None or len(self.top_points) != self.degree:
                raise ValueError("ordinal rank needs degree >= 1 and matching top points")
        if (self.espec == Cardinal.continuum()) != self.rank.is_infinity:
            raise ValueError("espec is continuum exactly when the rank is infinity")
        return self

    def lines(self) -> List[str]:
        return [
            f"rank: {self.rank}",
            f"degree: {self.degree if self.degree is not None else '-'}",
            f"top: {_words(self.top_points)}",
            f"espec: {self.espec}",
        ]


class GeneratorCell(EngineModel):
    state: str
    access: str
    point: InstanceOf[UPWord]


class LeastGeneratingSetInfo(EngineModel):
    exists: bool
    generators: Tuple[GeneratorCell, ...] = ()
    counterexample: Optional[InstanceOf[Clopen]] = None

    def lines(self) -> List[str]:
        if not self.exists:
            return [
                "least generating set: none (no isolated points)"
                if self.counterexample is not None and self.counterexample.is_whole()
                else "least generating set: none",
                f"witness: {self.counterexample}",
            ]
        out = ["least generating set: isolated points"]
        out += [f"cell: {g.state} access={g.access or '-'} point={g.point}" for g in self.generators]
        return out


class TwoTreeWitness(EngineModel):
    state: str
    word0: str
    word1: str


class DecompositionPart(EngineModel):
    clopen: InstanceOf[Clopen]
    rank: InstanceOf[RankValue]
    degree: int


# ===== Oracle / suite =====
class CoherenceReport(EngineModel):
    passed: bool
    checked: int
    counterexample: Optional[str] = None
    detail: str = ""


class CheckResult(EngineModel):
    name: str
    passed: bool
    seconds: float
    detail: str = ""
    seed: Optional[int] = None


class SuiteReport(EngineModel):
    seed: int
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failed(self) -> List[str]:
        return [r.name for r in self.results if not r.passed]

    def lines(self) -> List[str]:
        out = [f"seed: {self.seed}"]
        for r in self.results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.seconds:.2f}s)"
            if not r.passed and r.detail:
                line += f" counterexample: {r.detail}"
            out.append(line)
        out.append(f"result: {'pass' if self.passed else 'fail'}")
        return out


# ===== Command reports =====
class CompileReport(EngineModel):
    path: str
    states: int


class DecomposeReport(EngineModel):
    parts: Tuple[DecompositionPart, ...]

    def lines(self) -> List[str]:
        out = [f"parts: {len(self.parts)}"]
        out += [f"part: {p.clopen} ({p.rank},{p.degree})" for p in self.parts]
        return out


class InvariantsReport(EngineModel):
    rank: InstanceOf[RankValue]
    degree: int


class IsoReport(EngineModel):
    isomorphic: bool
    left: Tuple[InstanceOf[RankValue], int]
    right: Tuple[InstanceOf[RankValue], int]

    def lines(self) -> List[str]:
        return [
            f"isomorphic: {'yes' if self.isomorphic else 'no'}",
            f"left: ({self.left[0]},{self.left[1]})",
            f"right: ({self.right[0]},{self.right[1]})",
        ]


class KernelReport(EngineModel):
    kernel: PathAutomaton
    cardinality: InstanceOf[Cardinal]
    two_tree: Optional[TwoTreeWitness] = None

    def lines(self) -> List[str]:
        n = len(self.kernel.states)
        out = [f"kernel: {n} state{'s' if n != 1 else ''}", f"cardinality: {self.cardinality}"]
        if self.two_tree is not None:
            t = self.two_tree
            out.append(f"two-tree: {t.state} {t.word0} {t.word1}")
        return out


class PointReport(EngineModel):
    point: InstanceOf[UPWord]
    accumulation: Optional[bool] = None
    rank: Optional[InstanceOf[RankValue]] = None

    def lines(self) -> List[str]:
        if self.rank is not None:
            return [str(self.rank)]
        return [f"accumulation point: {'yes' if self.accumulation else 'no'}"]


class DotExport(EngineModel):
    source: str
    dot: str
    path: Optional[str] = None

    def lines(self) -> List[str]:
        if self.path is not None:
            return [f"wrote: {self.path}"]
        return self.dot.rstrip("\n").split("\n")
