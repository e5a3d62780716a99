import random

import pytest

from codewidth.dnnf import CircuitBuilder, NnfCircuit


def pytest_addoption(parser):
    parser.addoption(
        "--show-reports", action="store_true", default=False, help="Show generated artifacts in output"
    )

@pytest.fixture
def show_reports(request):
    return request.config.getoption("--show-reports")

class TestLogger:
    __test__ = False

    def __init__(self, enabled):
        self.enabled = enabled

    def section(self, title):
        if self.enabled:
            print(f"\n\n{'='*80}\n🚀 TEST: {title}\n{'='*80}")

    def step(self, message):
        if self.enabled:
            print(f"\n👉 {message}")

    def response(self, label, content):
        if self.enabled:
            print(f"\n📝 {label}:\n{'-'*40}\n{content}\n{'-'*40}")

    def info(self, message):
        if self.enabled:
            print(f"   ℹ️  {message}")

@pytest.fixture
def logger(show_reports):
    return TestLogger(show_reports)


# ============================================================================
# Shared helpers
# ============================================================================

def random_circuit(seed: int, num_vars: int = 4, steps: int = 8) -> NnfCircuit:
    """
    Small random NNF circuit. AND nodes only join children over disjoint
    variables, so the result is decomposable; OR nodes are unrestricted.
    """
    rng = random.Random(seed)
    builder = CircuitBuilder()
    pool = [builder.literal(v if rng.random() < 0.5 else -v) for v in range(1, num_vars + 1)]
    scopes = {node: {abs(builder.nodes[node].literal)} for node in pool}

    for _ in range(steps):
        first, second = rng.sample(pool, 2)
        if rng.random() < 0.5 and not scopes[first] & scopes[second]:
            node = builder.conjoin([first, second])
        else:
            node = builder.disjoin([first, second])
        scopes[node] = scopes.get(node, scopes[first] | scopes[second])
        pool.append(node)
    return builder.build(pool[-1], num_vars=num_vars)


def recursive_value(circuit: NnfCircuit, node: int, assignment) -> int:
    """Evaluation straight from the node definitions, one call per edge."""
    n = circuit.nodes[node]
    if n.kind == "L":
        return int(assignment[abs(n.literal)] == (1 if n.literal > 0 else 0))
    values = [recursive_value(circuit, child, assignment) for child in n.children]
    if n.kind == "A":
        return int(all(values))
    return int(any(values))


@pytest.fixture
def make_random_circuit():
    return random_circuit


@pytest.fixture
def reference_value():
    return recursive_value
