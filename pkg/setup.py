"""
Setup max-convolution algebra toolbox

"""

from setuptools import setup, find_packages


with open('README.rst') as f:
    long_description = f.read()

with open('requirements.txt') as f:
    requirements = f.read().splitlines()

setup(
    name='maxalg',
    version='0.1.0',  # see https://www.python.org/dev/peps/pep-0440/
    description='Classical, free and Boolean max-convolution of distribution '
                'functions',
    long_description=long_description,
    author='maxalg contributors',
    license='MIT',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        # License
        'License :: OSI Approved :: MIT License',

        # Supported Python versions
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
    ],

    keywords='extreme value theory, free probability, max-convolution',

    python_requires='>=3.8',

    install_requires=requirements,

    setup_requires=['pytest-runner'],

    tests_require=['pytest', 'hypothesis'],

    # Install them with $ pip install -e .[test,doc]
    extras_require={
        'test': ['pytest', 'hypothesis'],
        'doc': ['sphinx']
    },

    packages=find_packages(exclude=['tests', 'tests.*']),

    package_data={
        'maxalg': ['config_defaults']
    },

    # Include documentation
    data_files=[
        ('', ['README.rst']),
    ],

    # To provide executable scripts, use entry points in preference to the
    # "scripts" keyword. Entry points provide cross-platform support and allow
    # pip to create the appropriate form of executable for the target platform.
    entry_points={
        'console_scripts': ['maxalg=maxalg.bin.run:main']
    },
)
