# Import necessary libraries (consistent across all modules)

# Native to Python
import sys  # Provides access to system-specific parameters and functions
import os  # Environment variables (TUTTE_CACHE_BYTES, TUTTE_THREADS, TUTTE_EAR_REDUCTION) and CPU count
import re  # Supports regular expression matching (family DSL and edge-list parsing)
import json  # Enables conversion between Python dictionaries and JSON strings (poset and table exports)
import math  # Binomial coefficients for connected-spanning-subgraph counts
import random  # Seeded parameter draws for the randomized theorem suites
import argparse  # Command-line parsing for the main/ entry scripts
import itertools  # Permutations, combinations and products for searches and brute force
from pathlib import Path  # Offers an object-oriented interface for filesystem paths
from fractions import Fraction  # Exact rational arithmetic for polynomial evaluation
from enum import Enum  # Small closed vocabularies (edge kinds, orderings)
from dataclasses import dataclass, field  # Lightweight record classes
from collections import Counter, OrderedDict, defaultdict  # Multisets, LRU memo storage and grouping
from concurrent.futures import ProcessPoolExecutor  # Worker pool for poset and enumeration fan-out
from typing import Union, List, Optional, Dict, Any, Iterable, Iterator, Callable, Sequence, Mapping  # Type hinting for function parameters and return values

# Install Required
import networkx as nx  # (networkx) Connectivity, bridges, biconnected components, transitive reduction
import numpy as np  # (numpy) Integer adjacency and Laplacian matrices
import pandas as pd  # (pandas) Tabular rendering of parameter tables and audit reports
import sympy as sp  # (sympy) Exact univariate polynomials and exact determinants
from tqdm import tqdm  # (tqdm) Optional progress bars for long poset builds
