"""Problem-file parsing and canonical serialization.

A problem file is a JSON object with a field tag, a quiver block, a relations
block, named module blocks, and an optional named task list.  Diagnostics are
field-addressed ("relations[0].paths[1]: ...").  Canonical serialization
sorts keys and normalizes rationals so files round-trip byte-exactly.
"""

import json

from .errors import InputError
from .linalg import Field
from .quiver import Quiver
from .algebra import GradedAlgebra, Relation
from .gmodule import GradedModule, standard_module


class ProblemFile:

    def __init__(self, field, quiver, algebra, relations_json, modules, tasks):
        self.field = field
        self.quiver = quiver
        self.algebra = algebra
        self.relations_json = relations_json
        self.modules = modules  # name -> raw json spec
        self.tasks = tasks

    def module_names(self):
        return sorted(self.modules)

    def module(self, name, window=None):
        """Resolve a named module, realizing standard ones on the window."""
        if name not in self.modules:
            raise InputError(f"unknown module {name!r}; have {self.module_names()}")
        spec = self.modules[name]
        if "standard" in spec:
            std = spec["standard"]
            kind = std.get("kind")
            vertex = std.get("vertex")
            shift = int(std.get("shift", 0))
            if kind == "S" and window is None:
                return standard_module(self.algebra, "S", vertex, shift)
            if window is None:
                window = (-10, 10)
            return standard_module(self.algebra, kind, vertex, shift,
                                   window=window)
        return GradedModule.from_json_dict(self.algebra, spec,
                                           where=f"modules.{name}")

    def to_json_dict(self):
        relations = []
        for rel in self.algebra.relations:
            paths = []
            coeffs = []
            for c, p in rel.terms:
                paths.append(list(p.names()))
                coeffs.append(self.field.fmt(self.field.of(c)))
            relations.append({"paths": paths, "coeffs": coeffs})
        out = {
            "field": self.field.tag,
            "quiver": self.quiver.to_json_dict(),
            "relations": relations,
            "modules": self.modules,
        }
        if self.tasks:
            out["tasks"] = self.tasks
        return out


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_problem_dict(data):
    if not isinstance(data, dict):
        raise InputError("problem file must be a JSON object")
    if "field" not in data:
        raise InputError("field: missing ('Q' or 'Fp:<p>')")
    field = Field(str(data["field"]))
    if "quiver" not in data:
        raise InputError("quiver: missing block")
    quiver = Quiver.from_json_dict(data["quiver"], where="quiver")
    relations = []
    for i, r in enumerate(data.get("relations", [])):
        where = f"relations[{i}]"
        if not isinstance(r, dict) or "paths" not in r or "coeffs" not in r:
            raise InputError(f"{where}: expected an object with 'paths' and 'coeffs'")
        if len(r["paths"]) != len(r["coeffs"]):
            raise InputError(f"{where}: paths/coeffs length mismatch")
        terms = []
        for j, (names, coeff) in enumerate(zip(r["paths"], r["coeffs"])):
            try:
                path = quiver.path_from_names(tuple(names))
            except InputError as e:
                raise InputError(f"{where}.paths[{j}]: {e}") from None
            terms.append((field.parse(str(coeff)), path))
        lengths = {p.length for _c, p in terms}
        if len(lengths) > 1:
            raise InputError(f"{where}: relation not homogeneous")
        if lengths and min(lengths) < 2:
            raise InputError(f"{where}: relation not in (kQ+)^2")
        try:
            relations.append(Relation(terms))
        except InputError as e:
            raise InputError(f"{where}: {e}") from None
    algebra = GradedAlgebra(quiver, field, relations)
    modules = {}
    for name, spec in data.get("modules", {}).items():
        where = f"modules.{name}"
        if not isinstance(spec, dict):
            raise InputError(f"{where}: expected an object")
        if "standard" in spec:
            std = spec["standard"]
            if std.get("kind") not in ("P", "I", "S"):
                raise InputError(f"{where}.standard.kind: expected P, I or S")
            quiver.check_vertex(str(std.get("vertex")))
        else:
            for key in ("window", "dims"):
                if key not in spec:
                    raise InputError(f"{where}: missing {key!r}")
        modules[name] = spec
    tasks = data.get("tasks", [])
    if not isinstance(tasks, list):
        raise InputError("tasks: expected a list")
    for i, task in enumerate(tasks):
        where = f"tasks[{i}]"
        if not isinstance(task, dict) or "command" not in task:
            raise InputError(f"{where}: expected an object with 'command'")
        for key in ("module", "source", "target", "other"):
            name = task.get(key)
            if name is not None and name not in modules:
                raise InputError(f"{where}.{key}: unknown module {name!r}")
    return ProblemFile(field, quiver, algebra, relations, modules, tasks)


def parse_problem(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read problem file: {e}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON at line {e.lineno}, column {e.colno}: "
                         f"{e.msg}") from None
    return parse_problem_dict(data)
