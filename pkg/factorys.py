# STL imports
import random
import sys

sys.path.append('.')
# Third party imports
import faker
from faker.providers import BaseProvider

# local application imports
from steenres.core.freemod import FreeElement, apply_differential, full_basis
from steenres.core.milnor import basis_of_degree

PRESET_NAMES = ["A(0)", "A(1)", "A(2)", "E(Sq1,Sq(0,1))", "seg(4)", "F(1)", "F'(1)", "F(2)", "F'(2)"]


class FakerProvider(BaseProvider):

    def milnor_degree(self, high=12):
        return random.randint(0, high)

    def milnor_exponent(self, high=12):
        return random.choice(basis_of_degree(self.milnor_degree(high)))

    def subalgebra_name(self):
        return random.choice(PRESET_NAMES)


fake = faker.Faker()
fake.add_provider(FakerProvider)


def element_factory(res, s, t, density=0.5):
    """
    Random nonzero generator combination in C_{s,t}, None if C_{s,t} is zero.
    """
    basis = full_basis(res, s, t).basis
    if not basis:
        return None
    picked = [term for term in basis if random.random() < density]
    return FreeElement(picked or [random.choice(basis)])


def boundary_factory(res, s, t, attempts=8):
    """
    Pair (w0, d(w0)) with w0 in C_{s,t} and nonzero boundary, None if none was found.
    """
    for _ in range(attempts):
        w0 = element_factory(res, s, t)
        if w0 is None:
            return None
        z = apply_differential(res, w0)
        if z:
            return w0, z
    return None

