#!/usr/bin/env python

# Installation script for orbimirror

"""orbimirror - exact tables for weighted projective spaces and their mirrors.

Packages:   orbimirror
"""

import os
import subprocess
from configparser import RawConfigParser
from setuptools import setup, find_packages

# Version reported outside a git checkout, e.g. from an sdist.
FALLBACK_VERSION = '0.1.0'

MYDIR = os.path.dirname(os.path.abspath(__file__))
VERSIONCFG = os.path.join(MYDIR, 'src', 'orbimirror', 'version.cfg')


def _git(*args):
    out = subprocess.check_output(('git',) + args, cwd=MYDIR,
                                  stderr=subprocess.DEVNULL,
                                  universal_newlines=True)
    return out.strip()


def gitVersionData():
    """Version data of the git checkout, or None outside of git.

    A tag v0.2.0 with 3 commits on top gives version "0.2.0.post3".
    """
    try:
        desc = _git('describe', '--tags', '--match=v[0-9]*')
        commit, timestamp, date = _git(
            'log', '-1', '--format=%H %ct %ci').split(None, 2)
    except (OSError, subprocess.CalledProcessError, ValueError):
        return None
    tag, _, rest = desc.lstrip('v').partition('-')
    ncommits = rest.split('-')[0]
    version = tag + ('.post' + ncommits if ncommits else '')
    return dict(version=version, commit=commit, date=date,
                timestamp=timestamp)


def updateVersionConfig():
    """Refresh version.cfg from git and return its version string."""
    cp = RawConfigParser()
    cp.read(VERSIONCFG)
    stored = cp.defaults()
    data = gitVersionData()
    if data is None:
        if stored.get('version'):
            return stored['version']
        data = dict(version=FALLBACK_VERSION, commit='', date='',
                    timestamp='0')
    if stored.get('commit') != data['commit'] or not stored:
        for k, v in data.items():
            cp.set('DEFAULT', k, str(v))
        with open(VERSIONCFG, 'w') as fp:
            cp.write(fp)
    return data['version']


with open(os.path.join(MYDIR, 'README.rst')) as fp:
    long_description = fp.read()

# define distribution
setup_args = dict(
    name = "orbimirror",
    version = updateVersionConfig(),
    packages = find_packages(os.path.join(MYDIR, 'src')),
    package_dir = {'' : 'src'},
    test_suite = 'orbimirror.tests',
    include_package_data = True,
    package_data = {'orbimirror' : ['version.cfg']},
    install_requires = ['numpy', 'scipy', 'sympy'],
    tests_require = ['hypothesis'],
    extras_require = {'test' : ['hypothesis']},
    entry_points = {
        'console_scripts' : ['orbimirror = orbimirror.cli:main'],
    },
    python_requires = '>=3.6',
    zip_safe = False,
    author = "The orbimirror developers",
    description = "Exact orbifold cohomology, Landau-Ginzburg mirror and "
        "Frobenius data of weighted projective spaces",
    long_description = long_description,
    long_description_content_type = 'text/x-rst',
    license = 'BSD-style license',
    keywords = "weighted projective space orbifold cohomology mirror "
        "symmetry Frobenius manifold WDVV Gromov-Witten",
    classifiers = [
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: MacOS',
        'Operating System :: POSIX',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)

if __name__ == '__main__':
    setup(**setup_args)

# End of file
