import pytest

from gradedquiver import Quiver, GradedAlgebra, Relation, QQ


def rel(quiver, terms):
    return Relation((c, quiver.path_from_names(names)) for c, names in terms)


def make_fix_a(field=QQ):
    """Loop a at vertex 1 plus an arrow b: 1 -> 2, with b*a dead."""
    q = Quiver(["1", "2"], [("a", "1", "1"), ("b", "1", "2")])
    return GradedAlgebra(q, field, [rel(q, [(1, ("b", "a"))])])


def make_fix_b(field=QQ):
    """The A_2 quiver 1 -> 2 with no relations."""
    q = Quiver(["1", "2"], [("a", "1", "2")])
    return GradedAlgebra(q, field, [])


def make_fix_c(field=QQ, ray_end=13):
    """Commuting square 1 => {2,3} => 4 followed by a ray 4 -> 5 -> ... -> ray_end."""
    vertices = [str(i) for i in range(1, ray_end + 1)]
    arrows = [("a", "1", "2"), ("b", "1", "3"), ("g", "2", "4"), ("d", "3", "4")]
    arrows += [(f"e{k}", str(k - 1), str(k)) for k in range(5, ray_end + 1)]
    q = Quiver(vertices, arrows)
    return GradedAlgebra(q, field, [rel(q, [(1, ("g", "a")), (-1, ("d", "b"))])])


def make_fix_d(field=QQ, top=5):
    """Linear quiver top -> ... -> 1 -> 0 with all length-two paths dead."""
    vertices = [str(i) for i in range(top + 1)]
    arrows = [(f"a{i}", str(i), str(i - 1)) for i in range(1, top + 1)]
    q = Quiver(vertices, arrows)
    relations = [rel(q, [(1, (f"a{i}", f"a{i + 1}"))]) for i in range(1, top)]
    return GradedAlgebra(q, field, relations)


@pytest.fixture(scope="session")
def fix_a():
    return make_fix_a()


@pytest.fixture(scope="session")
def fix_b():
    return make_fix_b()


@pytest.fixture(scope="session")
def fix_c():
    return make_fix_c()


@pytest.fixture(scope="session")
def fix_d():
    return make_fix_d()
