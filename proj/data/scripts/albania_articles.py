"""Albania 2019 news fixture: six articles, every sentence labeled.

Labels: B = building, I = infrastructure, R = resilience, O = other.
Several sentences are quoted verbatim from wire coverage of the event.
"""

ARTICLES = [
    {
        "slug": "wire-day0",
        "title": "Deadly earthquake strikes Albania",
        "offset_hours": 6,
        "sentences": [
            ("O", "A powerful earthquake struck Albania early on Tuesday, the strongest to hit the country in decades."),
            ("O", "The earthquake struck at 3:54 a.m. near the Adriatic coast, about 19 miles west of Tirana, home to nearly 900,000 people."),
            ("O", "The U.S. Geological Survey said the quake had a magnitude of 6.4 and a depth of about 20 kilometres."),
            ("B", "Rescuers in Albania dug through the rubble of collapsed buildings in search of survivors on Tuesday, after a 6.4-magnitude earthquake struck the Balkan nation, killing at least 23 people and injuring 650."),
            ("B", "Four buildings, including a five-storey apartment block, collapsed in Kodër-Thumanë and the town was hardest hit from the earthquake."),
            ("B", "In Durres, a hotel on the seafront partially collapsed and several apartment buildings were left leaning."),
            ("R", "Emergency crews worked through the night to pull survivors from the ruins."),
            ("B", "Videos and pictures shared on social media showed chaotic scenes of residents rummaging through the rubble, or trying to extricate people trapped under collapsed buildings."),
            ("O", "The shaking was felt across the Adriatic in southern Italy and in neighbouring Montenegro."),
            ("O", "Several strong aftershocks followed, including one of magnitude 5.4 during the morning."),
            ("R", "Schools in Tirana and Durres were closed for the rest of the week."),
            ("I", "Power was cut in parts of Durres after the shaking damaged local substations."),
            ("R", "Hospitals in Tirana treated hundreds of injured people, many of them with fractures."),
            ("B", "Everything was moving in an unbelievable rhythm, I could hear the walls cracking, dishes and glass breaking."),
            ("R", "Many residents spent the night outdoors in cars and makeshift shelters for fear of aftershocks."),
            ("O", "Albania sits on an active fault zone and was struck by a magnitude 5.6 earthquake in September."),
            ("I", "The coastal road between Durres and Tirana was briefly closed while engineers inspected an overpass."),
            ("R", "The government declared a day of national mourning for the victims."),
            ("O", "Seismologists said the earthquake occurred on a thrust fault beneath the coastal plain."),
            ("B", "In Elbasan, a town about 35 miles from Durres, Olsi Shehi, a 39-year-old cook, said a four-story house had fallen, trapping people inside."),
            ("R", "Rescue teams from Italy, Greece and Serbia arrived in the afternoon to help with the search."),
            ("O", "The country has a population of about 2.8 million people."),
        ],
    },
    {
        "slug": "rescue-day1",
        "title": "Rescuers race to find survivors in Durres",
        "offset_hours": 30,
        "sentences": [
            ("R", "Subsequently, rescue crews with specialised equipment, sniffer dogs and emergency supplies came to Albania from neighbouring countries and other European nations to help in the search efforts and provide for those left homeless."),
            ("R", "The death toll rose to 30 on Wednesday as rescuers recovered more bodies from the rubble."),
            ("B", "Most of the victims died in Durres and Thumane, where several apartment blocks collapsed."),
            ("B", "Engineers said many of the collapsed buildings were reinforced concrete frames with weak ground floors."),
            ("R", "A state of emergency lasting 30 days was declared by the Albanian government for Durres, Thumanë and Tirana and later extended to Lezhë and LaAS."),
            ("R", "In the immediate aftermath, 2,500 people became displaced by the earthquake and are temporarily being accommodated either in the Niko Dovana Stadium of Durres in tents or in hotels."),
            ("I", "Water supply was interrupted in several neighbourhoods of Durres after pipes broke."),
            ("R", "Volunteers distributed food, water and blankets to families sleeping in tents."),
            ("B", "Cracks appeared in the walls of many older homes in the village of Bubq."),
            ("O", "The Institute of Geosciences recorded more than 300 aftershocks in the first day."),
            ("R", "Prime Minister Rama said that the state budget was being reconfigured to manage the situation following the earthquake."),
            ("B", "Durres castle walls damaged by the earthquake In Albania, a large proportion of the earthquake damage has been blamed on corruption, violations of the building code and substandard construction following the demise of communism during the early 1990s."),
            ("R", "The European Union activated its civil protection mechanism to send assistance."),
            ("I", "The port of Durres halted operations for a day while the quay walls were inspected."),
            ("O", "Reporters described a city covered in dust and the sound of sirens."),
            ("R", "Shops and cafes in central Durres stayed closed as residents waited for news."),
            ("B", "A nine-storey building in Durres tilted and was later evacuated."),
            ("O", "The epicentre was located near the town of Mamurras, north of Durres."),
            ("R", "Blue and white coloured emergency tents for displaced people near stadium in Durres The EU office in Albania estimated that some 1.9 million people out of a total population of 2.8 million have been affected by the earthquake."),
            ("I", "Electricity was restored to most of Tirana by the evening."),
            ("R", "Hundreds of Albanians in Albania and Kosovo opened their homes to people displaced by the earthquake."),
            ("O", "The quake was the deadliest in Albania since 1920."),
        ],
    },
    {
        "slug": "damage-assessment",
        "title": "Thousands of buildings damaged, officials say",
        "offset_hours": 80,
        "sentences": [
            ("B", "Rama said on Saturday that preliminary figures showed more than 1,465 buildings in the capital, Tirana, and about 900 in nearby Durres were seriously damaged in Tuesday's 6.4-magnitude predawn earthquake."),
            ("B", "He said more than 1,465 buildings in Tirana and about 900 in nearby Durres had been seriously damaged."),
            ("B", "Earthquake damage is being checked by civil engineers from the European Union, United States and local experts to assess whether buildings are structurally sound, unsafe and required demolition or just needed replastering."),
            ("R", "About 2,500 people from damaged homes have been sheltered in hotels."),
            ("B", "A 20-year-old woman, in a coma after she was injured by a falling brick while leaving her apartment in Tirana, died, the health ministry said on Saturday."),
            ("B", "Inspectors marked hundreds of homes with red signs meaning they must be demolished."),
            ("B", "In Durres, hundreds of residents as well as Rama and President Ilir Meta attended the funeral of nine members of a single extended family who were killed when a four-storey villa collapsed."),
            ("I", "Engineers also inspected bridges on the highway to the north and found only minor damage."),
            ("R", "Families whose homes were declared unsafe were told to move into hotels or tents."),
            ("B", "Older masonry houses in the villages around Durres were badly cracked."),
            ("O", "The government said the figures were preliminary and could change."),
            ("I", "Some rural roads remained blocked by fallen debris."),
            ("R", "The search-and-rescue operation for earthquake survivors in Albania has ended, with the death toll standing at 51 and no more bodies believed to be in the ruins, Prime Minister Edi Rama said."),
            ("B", "Experts said poor concrete and missing reinforcement contributed to the collapses."),
            ("R", "Officials said the reconstruction of damaged homes would begin in the new year."),
            ("O", "The magnitude was confirmed by several international agencies."),
            ("B", "Some buildings completed only a few years ago also suffered serious cracking."),
            ("I", "Water and sewage pipes in parts of Thumane were damaged."),
            ("R", "Local businesses in Thumane lost weeks of income."),
            ("O", "Scientists warned that aftershocks could continue for several weeks."),
            ("B", "The municipality plans to demolish unsafe buildings before the winter."),
            ("R", "Some students from Tirana went to assist relief efforts in Durres and delivered hundreds of meals to earthquake affected people."),
        ],
    },
    {
        "slug": "government-response",
        "title": "Albania extends state of emergency",
        "offset_hours": 110,
        "sentences": [
            ("R", "On 30 November Prime Minister Rama announced the end of the search and rescue operation, as no more bodies were expected to be under the rubble."),
            ("R", "In accordance with the Albanian constitution regarding an emergency situation, the Albanian parliament granted Prime Minister Edi Rama state of emergency powers to deal with earthquake aftermath."),
            ("R", "The government promised to rebuild every home destroyed by the earthquake within a year."),
            ("R", "An international donors conference will be organised to raise funds for reconstruction."),
            ("O", "Opposition parties criticised the decision to extend the emergency powers."),
            ("R", "Families living in tents will be moved to hotels along the coast before winter."),
            ("I", "The government said the damaged power network in Durres had been fully restored."),
            ("R", "Schools in Durres will reopen next week in buildings declared safe by engineers."),
            ("B", "Authorities said about 11,000 homes had been inspected so far."),
            ("O", "The prime minister spoke to reporters after a cabinet meeting in Tirana."),
            ("R", "Tax payments will be suspended for businesses in the most affected areas."),
            ("I", "Highway traffic returned to normal after the inspections of the overpasses."),
            ("R", "Aid agencies said thousands of people still needed shelter and food."),
            ("O", "The European Commission president called the prime minister to offer condolences."),
            ("B", "Engineers recommended that several damaged apartment buildings be demolished."),
            ("R", "Volunteers continued to collect clothes and food for displaced families."),
            ("O", "Seismologists recorded a magnitude 4.9 aftershock on Friday."),
            ("R", "The government set up a fund to compensate families who lost relatives."),
            ("I", "Telephone and internet services worked normally throughout the crisis."),
            ("R", "Recovery of the tourism sector in Durres is expected to take time."),
            ("O", "Albania is a candidate for membership of the European Union."),
            ("R", "Officials said the total number of injured people reached about 2,000."),
        ],
    },
    {
        "slug": "costs-week1",
        "title": "Counting the cost of the Albania earthquake",
        "offset_hours": 140,
        "sentences": [
            ("I", "In early February 2020, the Albanian government publicised figures that earthquake damage to private and public properties cost a 844 million."),
            ("B", "Of those, more than 3,000 people were injured, 14,000 became homeless and throughout Albania 14,000 buildings were damaged of which 2,500 are rendered uninhabitable."),
            ("R", "Economic losses could reach several hundred million euros, according to early estimates."),
            ("I", "Repairs to roads, water pipes and power lines will cost tens of millions of euros."),
            ("R", "The construction sector is expected to play a key role in the recovery."),
            ("B", "Many of the damaged buildings were built illegally without permits."),
            ("O", "Economists said the country's growth forecast may be revised."),
            ("R", "Insurance coverage in Albania is low, leaving most homeowners without compensation."),
            ("B", "Engineers found that several hotels on the Durres coast had serious structural damage."),
            ("I", "The railway line between Durres and Tirana was inspected and reopened."),
            ("R", "The World Bank offered technical assistance for the post-disaster needs assessment."),
            ("O", "The earthquake was felt by millions of people in the Balkans."),
            ("R", "Many families say they cannot afford to repair their homes."),
            ("B", "Homes built of brick and stone in rural areas suffered the heaviest damage."),
            ("I", "The water utility in Durres repaired more than 100 pipe breaks."),
            ("O", "The central bank said inflation remained stable."),
            ("R", "Displaced residents said life in the hotels was difficult for children."),
            ("B", "Several schools were damaged and will need to be rebuilt."),
            ("O", "Analysts compared the event with the 1979 Montenegro earthquake."),
            ("R", "Charities launched appeals to support earthquake victims through the winter."),
            ("I", "Power lines damaged in the mountain villages were repaired by the end of the week."),
            ("R", "Donations from the diaspora helped many families rent new apartments."),
        ],
    },
    {
        "slug": "recovery-week1",
        "title": "Life slowly returns to normal in Durres",
        "offset_hours": 160,
        "sentences": [
            ("R", "Shops and restaurants in Durres began to reopen one week after the earthquake."),
            ("R", "Children returned to classes in schools that passed safety inspections."),
            ("B", "Demolition crews began tearing down the most dangerous buildings in Durres."),
            ("R", "Many residents were still afraid to sleep inside their apartments."),
            ("I", "Traffic on the main roads into Durres returned to normal levels."),
            ("O", "Seismologists said the aftershock activity was gradually decreasing."),
            ("R", "Psychologists offered free counselling to survivors in the stadium camp."),
            ("B", "Residents of damaged apartment blocks waited for engineers to inspect their homes."),
            ("R", "Local volunteers organised meals for the families still living in tents."),
            ("O", "The weather turned cold and rainy over the weekend."),
            ("I", "The water supply in Durres was fully restored after repairs to the main pipeline."),
            ("R", "The government began paying rent subsidies to displaced families."),
            ("B", "Cracked walls and fallen plaster were visible in many older buildings along the seafront."),
            ("O", "Journalists from across Europe continued to report from the city."),
            ("R", "Businesses reported losses as tourists cancelled their holiday bookings."),
            ("B", "Engineers said some buildings could be repaired by strengthening the columns."),
            ("R", "The recovery and reconstruction process after this earthquake is likely to be lengthy."),
            ("O", "Scientists installed temporary seismic stations near the epicentre."),
            ("R", "Aid organisations continued to deliver supplies to remote villages."),
            ("I", "The port resumed normal cargo operations."),
            ("R", "Residents said the community had come together in the days after the disaster."),
            ("O", "The earthquake was the subject of a special parliamentary session."),
        ],
    },
]
