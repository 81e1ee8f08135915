"""Shared fixtures: small algorithm programs, renamed variants, and
builders for corpus directory trees."""

from __future__ import annotations

import pytest

# Eight genuinely different little algorithms. Renamed variants (same
# structure, fresh identifiers) live alongside for ordering checks.
ALGORITHMS = {
    "bubble_sort": """\
void bubble_sort(int *arr, int n) {
    int i;
    int j;
    for (i = 0; i < n; i++) {
        for (j = 0; j < n - i - 1; j++) {
            if (arr[j] > arr[j + 1]) {
                int tmp = arr[j];
                arr[j] = arr[j + 1];
                arr[j + 1] = tmp;
            }
        }
    }
}
""",
    "binary_search": """\
int binary_search(int *arr, int n, int key) {
    int low = 0;
    int high = n - 1;
    while (low <= high) {
        int mid = (low + high) / 2;
        if (arr[mid] == key) {
            return mid;
        }
        if (arr[mid] < key) {
            low = mid + 1;
        } else {
            high = mid - 1;
        }
    }
    return -1;
}
""",
    "gcd": """\
int gcd(int a, int b) {
    while (b != 0) {
        int t = b;
        b = a % b;
        a = t;
    }
    return a;
}
""",
    "fibonacci": """\
int fibonacci(int n) {
    int a = 0;
    int b = 1;
    int i;
    for (i = 0; i < n; i++) {
        int next = a + b;
        a = b;
        b = next;
    }
    return a;
}
""",
    "reverse_array": """\
void reverse_array(int *arr, int n) {
    int left = 0;
    int right = n - 1;
    while (left < right) {
        int tmp = arr[left];
        arr[left] = arr[right];
        arr[right] = tmp;
        left = left + 1;
        right = right - 1;
    }
}
""",
    "sum_array": """\
int sum_array(int *arr, int n) {
    int total = 0;
    int i;
    for (i = 0; i < n; i++) {
        total = total + arr[i];
    }
    return total;
}
""",
    "max_array": """\
int max_array(int *arr, int n) {
    int best = arr[0];
    int i;
    for (i = 1; i < n; i++) {
        if (arr[i] > best) {
            best = arr[i];
        }
    }
    return best;
}
""",
    "count_even": """\
int count_even(int *arr, int n) {
    int count = 0;
    int i;
    for (i = 0; i < n; i++) {
        if (arr[i] % 2 == 0) {
            count = count + 1;
        }
    }
    return count;
}
""",
}

# Identifier-renamed twins of five algorithms: structure and literals are
# untouched, every identifier is fresh.
RENAMED_VARIANTS = {
    "bubble_sort": """\
void order_items(int *data, int size) {
    int outer;
    int inner;
    for (outer = 0; outer < size; outer++) {
        for (inner = 0; inner < size - outer - 1; inner++) {
            if (data[inner] > data[inner + 1]) {
                int hold = data[inner];
                data[inner] = data[inner + 1];
                data[inner + 1] = hold;
            }
        }
    }
}
""",
    "binary_search": """\
int locate(int *items, int len, int target) {
    int lo = 0;
    int hi = len - 1;
    while (lo <= hi) {
        int center = (lo + hi) / 2;
        if (items[center] == target) {
            return center;
        }
        if (items[center] < target) {
            lo = center + 1;
        } else {
            hi = center - 1;
        }
    }
    return -1;
}
""",
    "gcd": """\
int common_factor(int first, int second) {
    while (second != 0) {
        int keep = second;
        second = first % second;
        first = keep;
    }
    return first;
}
""",
    "fibonacci": """\
int fib_series(int limit) {
    int prev = 0;
    int curr = 1;
    int step;
    for (step = 0; step < limit; step++) {
        int follow = prev + curr;
        prev = curr;
        curr = follow;
    }
    return prev;
}
""",
    "sum_array": """\
int accumulate(int *values, int len) {
    int acc = 0;
    int pos;
    for (pos = 0; pos < len; pos++) {
        acc = acc + values[pos];
    }
    return acc;
}
""",
}

# (algorithm, unrelated algorithm) pairs for ordering checks; each pair
# differs in control structure and data access pattern, not just names.
UNRELATED = {
    "bubble_sort": "gcd",
    "binary_search": "fibonacci",
    "gcd": "reverse_array",
    "fibonacci": "binary_search",
    "sum_array": "gcd",
}


@pytest.fixture
def algo_corpus(tmp_path):
    """A flat corpus directory with every base algorithm as a .c file."""
    root = tmp_path / "corpus"
    root.mkdir()
    for name, source in ALGORITHMS.items():
        (root / f"{name}.c").write_text(source)
    return root


def write_benchmark_tree(root) -> tuple[int, int]:
    """A mirrored benchmark layout: base/ holds 56 distinct programs, and
    eval/{correct,obvious,subtle}/ each hold all 56, for 168 instances.

    Returns (base_count, instance_count).
    """
    base = root / "base"
    base.mkdir(parents=True)
    names = []
    algo_items = sorted(ALGORITHMS.items())
    for index in range(56):
        algo_name, source = algo_items[index % len(algo_items)]
        variant_id = index // len(algo_items)
        name = f"{algo_name}_{variant_id:02d}"
        (base / f"{name}.c").write_text(
            source.replace(algo_name, f"{algo_name}_{variant_id:02d}"))
        names.append(name)
    for variant in ("correct", "obvious", "subtle"):
        vdir = root / "eval" / variant
        vdir.mkdir(parents=True)
        for name in names:
            source = (base / f"{name}.c").read_text()
            if variant == "obvious":
                source = "int unused_marker = 0;\n" + source
            elif variant == "subtle":
                source = source.replace("= 0;", "= 1;", 1)
            (vdir / f"{name}.c").write_text(source)
    return 56, 168
