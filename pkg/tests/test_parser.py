import pytest

from pgshell import parse_source, render_source
from pgshell.catalog import build_catalog_entry
from pgshell.errors import SourceError


def test_parse_twisted_cubic(twisted_cubic):
    src = (
        "ring S = QQ[z0,z1,z2,z3];\n"
        "ideal I = z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2;\n"
    )
    ps = parse_source(src)
    assert ps.ring == twisted_cubic.ring
    assert ps.ideals["I"] == twisted_cubic


def test_parse_prime_field():
    ps = parse_source("ring S = ZZ/32003[x,y];\nideal J = x^2 + y^2;")
    assert ps.ring.field.characteristic == 32003
    (gen,) = ps.ideals["J"].generators
    assert gen.homogeneous_degree() == 2


def test_parse_weights_and_comments():
    src = "// weighted example\nring R = QQ[x,y:2];\nideal K = y - x^2; // homogeneous\n"
    ps = parse_source(src)
    assert ps.ring.weights == (1, 2)
    assert not ps.warnings


def test_parse_rational_coefficients_and_signs():
    ps = parse_source("ring S = QQ[x,y];\nideal L = -x + 3/2*y, 2x*y, 7;")
    gens = ps.ideals["L"].generators
    assert str(gens[0]) in ("-x + 3/2*y", "3/2*y - x")
    assert str(gens[1]) == "2*x*y"
    assert gens[2].homogeneous_degree() == 0


def test_parse_zero_generator_gives_zero_ideal():
    ps = parse_source("ring S = QQ[x,y];\nideal Z = 0;")
    assert ps.ideals["Z"].is_zero()


@pytest.mark.parametrize(
    "source, line, col_min",
    [
        ("ideal I = z0 +", 1, 1),                      # missing ring declaration
        ("ring S = QQ[z0];\nideal I = z0 + ;", 2, 14), # dangling plus
        ("ring S = QQ[x];\nideal I = x + y;", 2, 15),  # unknown variable
    ],
)
def test_parse_negative_cases_have_positions(source, line, col_min):
    with pytest.raises(SourceError) as err:
        parse_source(source)
    assert err.value.line == line
    assert err.value.column >= col_min - 2
    assert f"{err.value.line}:" in str(err.value)


def test_zero_denominator():
    with pytest.raises(SourceError) as err:
        parse_source("ring S = QQ[x];\nideal I = 1/0;")
    assert "denominator" in str(err.value)


def test_inhomogeneous_warning_and_strict():
    src = "ring S = QQ[x,y];\nideal I = x + y^2;"
    ps = parse_source(src)
    assert len(ps.warnings) == 1
    with pytest.raises(SourceError):
        parse_source(src, strict=True)


def test_duplicate_names_rejected():
    with pytest.raises(SourceError):
        parse_source("ring S = QQ[x,x];\nideal I = x;")
    with pytest.raises(SourceError):
        parse_source("ring S = QQ[x];\nideal I = x;\nideal I = x;")


@pytest.mark.parametrize(
    "name,args",
    [
        ("rnc", ["2"]),
        ("rnc", ["3"]),
        ("rnc", ["4"]),
        ("veronese", []),
        ("scroll", []),
        ("tc-cone", []),
        ("ci", ["2", "3"]),
        ("points-rnc", ["3", "5"]),
        ("hyperplane", []),
        ("zero", []),
    ],
)
def test_round_trip_on_catalog_exports(name, args):
    entry = build_catalog_entry(name, args, seed=1)
    text = render_source(entry.ring, {"I": entry.ideal})
    ps = parse_source(text)
    assert ps.ring == entry.ring
    assert ps.ideals["I"] == entry.ideal
    # printing the parse gives the identical normalized source
    assert render_source(ps.ring, ps.ideals) == text
