from setuptools import setup, find_packages


version = '0.1.0'


install_requires = (
    'django>=3.2',
    'djangorestframework>=3.12',
    'numpy>=1.20',
    'scipy>=1.7',
)


setup(
    name='django-linkbench',
    packages=find_packages(),
    include_package_data=True,
    version=version,
    description='Benchmark of similarity and GNN link prediction on homogeneous graphs.',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    install_requires=install_requires,
    entry_points={
        'console_scripts': [
            'linkbench = linkbench.cli:main',
        ],
    },
    zip_safe=False,
)
