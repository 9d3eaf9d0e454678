from setuptools import setup

version = '0.1.0'

# # https://setuptools.readthedocs.io/en/latest/setuptools.html#basic-use
setup(
    name = "funnelq",
    version = version,

    install_requires = [
        'numpy >= 1.17' # Generator / PCG64 api of the seeded workloads
    ],

    extras_require = {
        'test': [
            'pytest >= 6.0',
            'hypothesis >= 5.0'
        ]
    },

    entry_points={
        'console_scripts': [
            'run-funnelq = funnelq.harness.main:main'
    ]
    },

    # this is needed for namespace packages:
    packages=[
        'funnelq.pq',
        'funnelq.pq.funnel',
        'funnelq.harness'
        ],

    include_package_data=True, # # conclusion: NEVER forget this : files get included but not installed
    # # "package_data" keyword is a practical joke: use MANIFEST.in instead

    # metadata for upload to PyPI
    author = "The funnelq developers",
    description = "Addressable multi-level funnel priority queue with a verification and benchmarking harness",
    license = "AGPL",
    keywords = "priority queue heap lambert-w benchmark",

    long_description ="""
    funnelq is an addressable max-priority queue built from levels of meta-heaps and common-heaps, load-balanced with the Lambert W function, together with a harness that verifies it against a reference queue and counts its primitive operations
    """,
    long_description_content_type='text/plain',

    classifiers = [
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Developers',
        'Operating System :: POSIX :: Linux',
        'Topic :: Software Development :: Libraries',
        'License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)',
        'Programming Language :: Python :: 3'
    ]
)
