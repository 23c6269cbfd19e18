"""Hand-labeled briefing sentences from past earthquakes.

Each list holds sentences in the register of reconnaissance briefings.
make_fixtures.py writes them to data/training/briefing_sentences.csv.
"""

BUILDING = [
    "A five-storey apartment block collapsed in the town centre.",
    "Many unreinforced masonry houses suffered partial or total collapse.",
    "Several reinforced concrete buildings developed soft-storey mechanisms at the ground floor.",
    "Diagonal shear cracks were observed in the columns of a six-storey hospital wing.",
    "Infill walls failed out of plane in dozens of residential buildings.",
    "The historic cathedral lost its bell tower and part of the nave roof.",
    "Engineers tagged more than 3,000 dwellings as unsafe to occupy.",
    "Most adobe homes in the rural villages were destroyed.",
    "Older brick buildings in the old quarter showed extensive facade damage.",
    "A newly built residential tower remained standing with only minor cracking.",
    "Precast concrete warehouses in the industrial zone lost their roof panels.",
    "Column failures triggered the pancake collapse of a commercial building.",
    "Nearly 1,200 houses were rendered uninhabitable after the main shock.",
    "Cracks appeared in load-bearing walls of the municipal office building.",
    "The school gymnasium suffered roof collapse due to connection failures.",
    "Non-ductile detailing such as widely spaced stirrups contributed to the collapses.",
    "Short-column failures were common in buildings with partial-height infill.",
    "Timber-framed houses generally performed well with only chimney damage.",
    "A hotel building partially collapsed, trapping guests in the lower floors.",
    "Retrofitted masonry buildings showed far less damage than their neighbours.",
    "Parapets and gable walls fell onto the streets in the downtown area.",
    "The upper floors of an apartment building pounded against the adjacent structure.",
    "Residents reported cracked walls and fallen plaster throughout the neighbourhood.",
    "About 450 buildings were damaged beyond repair and will require demolition.",
    "Beam-column joints lacked transverse reinforcement in the collapsed frames.",
    "Weak-storey collapses occurred in buildings with open ground-floor shops.",
    "The stone walls of traditional farmhouses separated at the corners.",
    "Inspectors found severe damage to the columns of a parking structure.",
    "Several mosques lost their minarets during the strong shaking.",
    "A four-story house collapsed and several occupants were pulled from the debris.",
    "Multicell clay block walls shattered in many low-rise residential buildings.",
    "Reinforced concrete shear walls in the taller buildings showed boundary element crushing.",
    "Many homes slid off their foundations because they were not anchored.",
    "Steel moment frames in the office park had no visible structural damage.",
    "The ceiling systems and partitions of the shopping mall collapsed.",
    "Two apartment blocks were leaning dangerously and were evacuated.",
    "Damage surveys classified 18 percent of inspected buildings as red tagged.",
    "The town hall, a masonry structure from the 1920s, suffered severe cracking.",
    "A residential building under construction collapsed onto a neighbouring house.",
    "Heavy roofs on weak walls led to the collapse of numerous village homes.",
    "Cracks in the stairwells made several apartment buildings unusable.",
    "Base-isolated buildings in the city showed no structural damage.",
    "Unreinforced masonry churches were the most heavily damaged structures in the region.",
    "Rescuers searched the ruins of collapsed buildings for trapped residents.",
    "Structural engineers assessed whether damaged buildings should be demolished or repaired.",
    "The earthquake destroyed or damaged more than 10,000 homes across the province.",
    "Falling bricks from damaged facades injured pedestrians.",
    "A dormitory building collapsed, killing several students inside.",
    "Poor concrete quality was evident in the crushed columns of the collapsed building.",
    "Liquefaction caused several buildings to tilt and settle unevenly.",
    "Corruption and violations of the building code were blamed for the collapsed apartment blocks.",
    "Apartment buildings constructed before modern seismic codes suffered the worst damage.",
]

INFRASTRUCTURE = [
    "A highway bridge lost two spans when its bearings failed.",
    "Landslides blocked the main road connecting the valley to the capital.",
    "Power outages affected about 300,000 customers after substations were damaged.",
    "The water distribution system suffered numerous pipe breaks.",
    "Port facilities experienced lateral spreading along the quay walls.",
    "The international airport closed briefly while the control tower was inspected.",
    "Rail service was suspended after tracks buckled near the epicentre.",
    "A gas pipeline rupture caused a fire in the industrial district.",
    "Cell phone networks were overloaded and several towers went offline.",
    "The dam operator reported minor cracking but no risk of failure.",
    "Wastewater treatment plants were shut down due to damaged tanks.",
    "Pavement cracks and settlement closed sections of the coastal highway.",
    "Electrical transmission towers collapsed on the mountain ridge.",
    "The main bridge over the river was closed for emergency inspection.",
    "Rockfalls damaged the railway tunnel portal.",
    "Electricity was restored to most of the city within two days.",
    "Water supply was cut off in several districts for nearly a week.",
    "The port cranes derailed and cargo operations were halted.",
    "Underground cables were severed by ground deformation along the fault.",
    "Road access to the affected villages was limited to four-wheel-drive vehicles.",
    "The power plant tripped offline and rolling blackouts followed.",
    "Damage to the water treatment plant forced residents to boil drinking water.",
    "Approach embankments of several bridges settled by up to half a metre.",
    "Traffic signals failed across the city due to the loss of power.",
    "Sewer lines were damaged by liquefaction in the low-lying areas.",
    "The coastal road was buried by debris from a large landslide.",
    "Telephone landlines were disrupted for three days.",
    "Fuel distribution terminals were damaged and supplies were rationed.",
    "The overpass columns showed flexural cracking but remained in service.",
    "Irrigation canals were breached and flooded nearby farmland.",
    "The electricity grid operator reported damage to three high-voltage transformers.",
    "Internet service providers reported widespread outages in the region.",
    "Highway embankments slumped, creating large cracks in the pavement.",
    "The metro system halted service to inspect tunnels and stations.",
    "Airport runways were undamaged and relief flights landed without delay.",
    "A pedestrian bridge collapsed onto the road below.",
    "Natural gas service was shut off as a precaution in the city centre.",
    "Broken water mains flooded several streets in the old town.",
    "The harbour breakwater settled and the pier cracked.",
    "Engineers found damage to bearings and shear keys of the viaduct.",
    "Roads were reopened after crews cleared rockfall debris.",
    "Two substations were damaged and the regional grid was disconnected.",
    "Significant road damage was visible in the capital after the shaking.",
    "Railway embankments slid into the river valley.",
    "Telecommunication towers toppled in the mountain villages.",
    "Pipelines carrying drinking water were ruptured at fault crossings.",
    "The container terminal reported settlement of up to one metre.",
    "The national highway was closed after a bridge pier cracked.",
    "Stormwater culverts collapsed under the road embankment.",
    "Earthquake damage to utilities and transportation was estimated at 200 million dollars.",
    "Utility crews worked through the night to repair the damaged power lines.",
    "Ferry service was suspended while the docks were inspected.",
]

RESILIENCE = [
    "About 2,500 people were displaced and are staying in tents near the stadium.",
    "A state of emergency was declared for the three most affected municipalities.",
    "Rescue teams with sniffer dogs arrived from neighbouring countries.",
    "Schools remained closed for two weeks while buildings were inspected.",
    "The government announced a reconstruction fund for families who lost their homes.",
    "Volunteers distributed hot meals and blankets to displaced residents.",
    "Hospitals treated hundreds of injured people in temporary field wards.",
    "Many residents chose to sleep outdoors for fear of aftershocks.",
    "The Red Cross set up shelters for more than 5,000 people.",
    "Businesses in the city centre remained shut for more than a week.",
    "The search and rescue operation ended after ten days.",
    "Emergency supplies were airlifted to isolated mountain villages.",
    "The prime minister said the state budget would be reallocated for recovery.",
    "International aid organisations pledged support for the reconstruction effort.",
    "Temporary housing units were installed for families whose homes were destroyed.",
    "Economic losses were estimated to exceed one billion dollars.",
    "Students were moved to tents and prefabricated classrooms to continue their lessons.",
    "Local authorities opened sports halls as evacuation centres.",
    "The death toll rose to 51 as rescuers recovered more bodies.",
    "Hundreds of families opened their homes to people displaced by the earthquake.",
    "Offices in the business district were closed while engineers checked the buildings.",
    "Psychological support teams were deployed to help survivors cope with trauma.",
    "Residents waited in long queues for drinking water and food rations.",
    "The army was deployed to assist with relief distribution.",
    "Insurance claims are expected to take months to process.",
    "Tourism bookings fell sharply in the weeks following the disaster.",
    "Community leaders organised neighbourhood watch groups to prevent looting.",
    "Thousands of people became homeless overnight.",
    "Donations poured in from the diaspora to support affected families.",
    "The parliament granted emergency powers to the government to manage the aftermath.",
    "Shops and restaurants gradually reopened during the second week.",
    "Health officials warned of disease outbreaks in crowded shelters.",
    "A national day of mourning was declared for the victims.",
    "Recovery of the local economy is expected to take several years.",
    "Children returned to school one month after the earthquake.",
    "Displaced families were accommodated in hotels along the coast.",
    "Civil protection agencies coordinated the evacuation of the damaged neighbourhoods.",
    "Relief workers reported shortages of tents and heating supplies.",
    "Many people lost their livelihoods when the factories were closed.",
    "Rescue crews pulled 45 survivors from the rubble in the first two days.",
    "The European Union activated its civil protection mechanism to send assistance.",
    "Elderly residents were relocated to care facilities in nearby towns.",
    "Authorities promised compensation for damaged homes within three months.",
    "Volunteer engineers helped residents understand which homes were safe to re-enter.",
    "Food banks reported a surge in demand after the disaster.",
    "The reconstruction process is likely to be lengthy given the scale of destruction.",
    "Community kitchens served thousands of meals each day.",
    "The number of injured people rose to more than 2,000.",
    "Aid convoys reached the remote villages after the roads were cleared.",
    "Workers were unable to return to their jobs for several weeks.",
    "Local markets reopened as life slowly returned to normal.",
    "Emergency tents for displaced people were set up near the stadium.",
]

OTHER = [
    "The earthquake had a moment magnitude of 6.4 and a depth of about 20 kilometres.",
    "The event occurred on a reverse fault beneath the coastal plain.",
    "More than 200 aftershocks were recorded in the following week.",
    "The region lies on the boundary between the African and Eurasian plates.",
    "Seismologists said the rupture propagated toward the northwest.",
    "The main shock was preceded by a magnitude 5.1 foreshock in September.",
    "The earthquake was felt as far away as the neighbouring capitals.",
    "Peak ground accelerations exceeded 0.2 g at the nearest recording station.",
    "This was the strongest earthquake to hit the country in decades.",
    "The epicentre was located about 30 kilometres from the capital.",
    "Historical records show a similar earthquake struck the area in 1926.",
    "Strong-motion stations recorded long-period pulses near the fault.",
    "The national seismological institute issued a preliminary report.",
    "Ground shaking lasted for about 20 seconds in the city.",
    "The fault is part of a thrust system that accommodates regional compression.",
    "Geologists mapped surface cracks along a 10 kilometre segment.",
    "The largest aftershock had a magnitude of 5.4.",
    "The earthquake struck shortly before dawn local time.",
    "Seismic hazard maps classify the region as high hazard.",
    "The quake was recorded by seismographs around the world.",
    "The rupture length was estimated at about 40 kilometres.",
    "Satellite radar images revealed uplift of several centimetres.",
    "Tectonic studies suggest the fault had been locked for centuries.",
    "The tsunami warning centre said no tsunami was expected.",
    "The focal mechanism indicates thrust faulting on a shallow plane.",
    "Instrumental intensity reached VIII in the epicentral area.",
    "The sequence included three events above magnitude 5.",
    "Residents described a loud rumbling sound before the shaking began.",
    "Reporters arrived in the city on the morning after the earthquake.",
    "The news agency published a timeline of the main events.",
    "The country has a population of about 2.8 million people.",
    "The region is known for its Mediterranean climate and olive groves.",
    "The president visited the area and spoke with journalists.",
    "Scientists plan to install temporary seismometers to monitor the aftershocks.",
    "The magnitude was later revised upward by the geological survey.",
    "Videos shared on social media showed swinging chandeliers and falling objects.",
    "The earthquake was widely discussed on social media within minutes.",
    "Officials held a press conference in the afternoon.",
    "The previous major earthquake in the region occurred in 1979.",
    "Scientists cautioned that larger earthquakes remain possible.",
    "The geological survey estimated the hypocentre depth at 22 kilometres.",
    "The shaking was reported in several neighbouring countries.",
    "Seismologists describe the area as one of the most active in Europe.",
    "The moment tensor solution was published within an hour.",
    "Researchers collected ground motion records from the national network.",
    "The city lies on soft alluvial deposits near the river delta.",
    "A preliminary analysis of the recordings is under way.",
    "The earthquake occurred at 3:54 a.m. local time.",
    "The agency reported the coordinates of the epicentre.",
    "The local time was seven hours ahead of the coordinated universal time.",
    "Further analysis of the fault geometry will be published next month.",
    "The earthquake ranks among the deadliest events of the year worldwide.",
]
